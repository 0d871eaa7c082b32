//! Planar convex bodies, chords, profiles, and the body zoo.
//!
//! Conventions:
//! - bodies live centroid-centered with circumradius ≤ 1/2, so every dilate
//!   λC with λ ≤ 1 fits a fundamental cell of the torus;
//! - directions Θ = (cos θ, sin θ) carry a canonical angle in [0, 2π);
//! - the chord γ_Θ(δ) is the slice {x ∈ C : x·Θ = A + δ} at depth δ from the
//!   support line with inward normal Θ (A = inf x·Θ over C);
//! - its split pieces γ± are measured from the intersection of the chord
//!   with the normal line through the touching boundary point.

pub mod piece;
pub mod zoo;

use crate::error::{Error, Result};
use piece::{MonotoneSpan, Piece};
pub use zoo::{make_body, BodySpec};

/// Plain 2D point / vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
    #[inline]
    pub fn dot(&self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }
    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
    /// Rotation by +90°.
    #[inline]
    pub fn perp(&self) -> Point {
        Point::new(-self.y, self.x)
    }
}

/// Unit direction with canonical angle in [0, 2π).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    theta: f64,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut t = theta.rem_euclid(two_pi);
        if t >= two_pi {
            t = 0.0;
        }
        Direction { theta: t }
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Unit vector (cos θ, sin θ).
    #[inline]
    pub fn unit(&self) -> Point {
        Point::new(self.theta.cos(), self.theta.sin())
    }

    pub fn opposite(&self) -> Direction {
        Direction::new(self.theta + std::f64::consts::PI)
    }
}

/// Lengths of the two chord pieces on either side of the normal line
/// through the touching point.
#[derive(Clone, Copy, Debug)]
pub struct ChordSplit {
    pub minus_len: f64,
    pub plus_len: f64,
}

impl ChordSplit {
    pub fn min(&self) -> f64 {
        self.minus_len.min(self.plus_len)
    }
    pub fn total(&self) -> f64 {
        self.minus_len + self.plus_len
    }
}

/// Fast membership test, family-specific.
#[derive(Clone, Debug)]
pub enum Shape {
    Disk {
        r: f64,
    },
    Poly {
        verts: Vec<Point>,
    },
    /// Axis-symmetric body {(x, y): |y| ≤ U(|x|)} with piecewise closed-form
    /// upper boundary.
    SymGraph {
        upper: Vec<UpperPiece>,
        xmax: f64,
    },
}

#[derive(Clone, Debug)]
pub struct UpperPiece {
    /// piece applies for |x| up to this bound
    pub x_hi: f64,
    pub kind: UpperKind,
}

#[derive(Clone, Copy, Debug)]
pub enum UpperKind {
    /// U(x) = c0 + c1 x + c2 x^p
    Power { c0: f64, c1: f64, c2: f64, p: f64 },
    /// U(x) = sqrt(r² − (x − ox)²)
    Circle { ox: f64, r: f64 },
}

const MEMBERSHIP_EPS: f64 = 1e-12;

/// An immutable planar convex body with piecewise-analytic boundary.
#[derive(Clone, Debug)]
pub struct ConvexBody {
    spec: BodySpec,
    pieces: Vec<Piece>,
    shape: Shape,
    area: f64,
    circumradius: f64,
    scale: f64,
    junctions: Vec<Point>,
    axis_symmetric: bool,
}

impl ConvexBody {
    pub(crate) fn assemble(
        spec: BodySpec,
        pieces: Vec<Piece>,
        shape: Shape,
        area: f64,
        circumradius: f64,
        scale: f64,
        axis_symmetric: bool,
    ) -> ConvexBody {
        let junctions = pieces.iter().map(|p| p.endpoints().0).collect();
        ConvexBody {
            spec,
            pieces,
            shape,
            area,
            circumradius,
            scale,
            junctions,
            axis_symmetric,
        }
    }

    pub fn spec(&self) -> &BodySpec {
        &self.spec
    }
    pub fn area(&self) -> f64 {
        self.area
    }
    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }
    /// Factor applied to the family's reference frame during construction.
    pub fn scale(&self) -> f64 {
        self.scale
    }
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }
    /// Arc junction points (profile breakpoints project from these).
    pub fn junctions(&self) -> &[Point] {
        &self.junctions
    }
    pub fn axis_symmetric(&self) -> bool {
        self.axis_symmetric
    }

    /// ∮ x dy over the ccw boundary chain; equals the area for a correctly
    /// assembled body (used as a construction self-check).
    pub fn boundary_area(&self) -> f64 {
        self.pieces.iter().map(|p| p.area_term()).sum()
    }

    /// Closed-body membership.
    pub fn contains(&self, pt: Point) -> bool {
        match &self.shape {
            Shape::Disk { r } => pt.norm() <= r + MEMBERSHIP_EPS,
            Shape::Poly { verts } => {
                let n = verts.len();
                for i in 0..n {
                    let a = verts[i];
                    let b = verts[(i + 1) % n];
                    let cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
                    if cross < -MEMBERSHIP_EPS {
                        return false;
                    }
                }
                true
            }
            Shape::SymGraph { upper, xmax } => {
                let ax = pt.x.abs();
                if ax > *xmax + MEMBERSHIP_EPS {
                    return false;
                }
                pt.y.abs() <= self.upper_boundary(ax) + MEMBERSHIP_EPS
            }
        }
    }

    /// U(|x|) for `SymGraph` bodies; 0 outside.
    pub fn upper_boundary(&self, ax: f64) -> f64 {
        match &self.shape {
            Shape::SymGraph { upper, xmax } => {
                if ax > *xmax {
                    return 0.0;
                }
                for up in upper {
                    if ax <= up.x_hi {
                        return match up.kind {
                            UpperKind::Power { c0, c1, c2, p } => c0 + c1 * ax + c2 * ax.powf(p),
                            UpperKind::Circle { ox, r } => {
                                (r * r - (ax - ox) * (ax - ox)).max(0.0).sqrt()
                            }
                        };
                    }
                }
                match upper.last().map(|u| u.kind) {
                    Some(UpperKind::Circle { ox, r }) => {
                        (r * r - (ax - ox) * (ax - ox)).max(0.0).sqrt()
                    }
                    _ => 0.0,
                }
            }
            _ => 0.0,
        }
    }

    /// Support interval (A, B): A = inf x·Θ, B = sup x·Θ over the body.
    pub fn support_interval(&self, dir: Direction) -> (f64, f64) {
        let (a, _, b) = self.support_with_argmin(dir);
        (a, b)
    }

    /// Support interval plus the boundary point attaining the infimum.
    /// When the infimum is attained on a flat edge, the edge midpoint is
    /// returned (the limit convention for split chords).
    pub fn support_with_argmin(&self, dir: Direction) -> (f64, Point, f64) {
        let th = dir.unit();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut arg = Point::new(0.0, 0.0);
        let flat_eps = 1e-13 * self.circumradius.max(1e-9);
        let mut flat_other: Option<Point> = None;
        for pc in &self.pieces {
            let mut cands: Vec<Point> = Vec::with_capacity(4);
            let (pa, pb) = pc.endpoints();
            cands.push(pa);
            cands.push(pb);
            for u in pc.dot_critical(th) {
                cands.push(pc.at(u));
            }
            for c in cands {
                let d = c.dot(th);
                if d < lo - flat_eps {
                    lo = d;
                    arg = c;
                    flat_other = None;
                } else if (d - lo).abs() <= flat_eps {
                    // flat contact: remember the extremes to average later
                    if (c.x - arg.x).abs() + (c.y - arg.y).abs() > flat_eps {
                        flat_other = Some(c);
                    }
                }
                if d > hi {
                    hi = d;
                }
            }
        }
        if let Some(o) = flat_other {
            arg = Point::new((arg.x + o.x) / 2.0, (arg.y + o.y) / 2.0);
        }
        (lo, arg, hi)
    }

    /// Slice length |{x ∈ C : x·Θ = t}|; zero outside the support interval.
    pub fn profile(&self, dir: Direction, t: f64) -> f64 {
        self.slicer(dir).profile(t)
    }

    /// Chord length |γ_Θ(δ)| at depth δ from the support line.
    pub fn chord(&self, dir: Direction, depth: f64) -> Result<f64> {
        let (a, b) = self.support_interval(dir);
        if depth < 0.0 || depth > b - a {
            return Err(Error::domain(format!(
                "chord depth {depth} outside [0, {}]",
                b - a
            )));
        }
        Ok(self.profile(dir, a + depth))
    }

    /// The two chord pieces on either side of the normal line through the
    /// boundary point attaining the support infimum.
    pub fn split_chord(&self, dir: Direction, depth: f64) -> Result<ChordSplit> {
        let th = dir.unit();
        let (a, argmin, b) = self.support_with_argmin(dir);
        if depth < 0.0 || depth > b - a {
            return Err(Error::domain(format!(
                "chord depth {depth} outside [0, {}]",
                b - a
            )));
        }
        let sl = self.slicer(dir);
        let (plo, phi) = match sl.slice_extent(a + depth) {
            Some(x) => x,
            None => return Ok(ChordSplit { minus_len: 0.0, plus_len: 0.0 }),
        };
        // chord endpoints have perpendicular coordinates plo ≤ phi; the
        // normal line through the touching point crosses at argmin·Θ⊥
        let q = argmin.dot(th.perp());
        Ok(ChordSplit {
            minus_len: (q - plo).max(0.0),
            plus_len: (phi - q).max(0.0),
        })
    }

    /// Minimal width over a 256-direction scan (used to budget chord depth).
    pub fn min_width(&self) -> f64 {
        let mut w = f64::INFINITY;
        for i in 0..256 {
            let th = Direction::new(std::f64::consts::PI * i as f64 / 256.0);
            let (a, b) = self.support_interval(th);
            w = w.min(b - a);
        }
        w
    }

    /// Cached slicing machinery for one direction.
    pub fn slicer(&self, dir: Direction) -> Slicer<'_> {
        Slicer::new(self, dir)
    }

    /// Projections of the arc junctions onto Θ — the breakpoints of the
    /// profile as a function of t.
    pub fn profile_breakpoints(&self, dir: Direction) -> Vec<f64> {
        let th = dir.unit();
        let mut ts: Vec<f64> = self.junctions.iter().map(|j| j.dot(th)).collect();
        ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ts.dedup_by(|a, b| (*a - *b).abs() < 1e-13);
        ts
    }
}

/// Per-direction slice solver: monotone sub-spans of the boundary sorted
/// once, then each slice costs two bisections.
pub struct Slicer<'a> {
    body: &'a ConvexBody,
    th: Point,
    perp: Point,
    spans: Vec<MonotoneSpan>,
    lo: f64,
    hi: f64,
}

impl<'a> Slicer<'a> {
    fn new(body: &'a ConvexBody, dir: Direction) -> Self {
        let th = dir.unit();
        let mut spans = Vec::with_capacity(2 * body.pieces.len());
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (idx, pc) in body.pieces.iter().enumerate() {
            let mut us = vec![0.0];
            us.extend(pc.dot_critical(th));
            us.push(1.0);
            for w in us.windows(2) {
                let (u0, u1) = (w[0], w[1]);
                let d0 = pc.at(u0).dot(th);
                let d1 = pc.at(u1).dot(th);
                lo = lo.min(d0.min(d1));
                hi = hi.max(d0.max(d1));
                spans.push(MonotoneSpan {
                    piece: idx,
                    u0,
                    u1,
                    d0,
                    d1,
                });
            }
        }
        Slicer {
            body,
            th,
            perp: th.perp(),
            spans,
            lo,
            hi,
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    /// Extent of the slice {x·Θ = t} in the perpendicular coordinate,
    /// or None when the slice misses the body.
    pub fn slice_extent(&self, t: f64) -> Option<(f64, f64)> {
        if t < self.lo || t > self.hi {
            return None;
        }
        let eps = 1e-13 * (self.hi - self.lo).max(1e-300);
        let mut pmin = f64::INFINITY;
        let mut pmax = f64::NEG_INFINITY;
        let mut found = false;
        for sp in &self.spans {
            let (dlo, dhi) = (sp.lo(), sp.hi());
            if dhi - dlo <= eps {
                // flat span parallel to the slice line
                if (t - dlo).abs() <= eps || (t - dhi).abs() <= eps {
                    let pc = &self.body.pieces[sp.piece];
                    for u in [sp.u0, sp.u1] {
                        let q = pc.at(u).dot(self.perp);
                        pmin = pmin.min(q);
                        pmax = pmax.max(q);
                        found = true;
                    }
                }
                continue;
            }
            if t < dlo || t > dhi {
                continue;
            }
            let pc = &self.body.pieces[sp.piece];
            // bisection for P(u)·Θ = t on the monotone span
            let (mut ua, mut ub, rising) = if sp.d0 <= sp.d1 {
                (sp.u0, sp.u1, true)
            } else {
                (sp.u1, sp.u0, false)
            };
            let _ = rising;
            for _ in 0..60 {
                let um = 0.5 * (ua + ub);
                if pc.at(um).dot(self.th) < t {
                    ua = um;
                } else {
                    ub = um;
                }
            }
            let q = pc.at(0.5 * (ua + ub)).dot(self.perp);
            pmin = pmin.min(q);
            pmax = pmax.max(q);
            found = true;
        }
        if found {
            Some((pmin, pmax))
        } else {
            None
        }
    }

    /// Slice length at offset t.
    pub fn profile(&self, t: f64) -> f64 {
        match self.slice_extent(t) {
            Some((a, b)) => (b - a).max(0.0),
            None => 0.0,
        }
    }
}

/// Result of the chord lower-bound scan.
#[derive(Clone, Debug, serde::Serialize)]
pub struct MinChordReport {
    /// min over the grid of chord(Θ, δ)/δ
    pub c_hat: f64,
    pub worst_theta: f64,
    pub worst_delta: f64,
}

/// Scan chord(Θ, δ)/δ over the given grids; the infimum stays positive for
/// every convex body (the chord of a convex body grows at least linearly in
/// depth near the boundary).
pub fn min_chord_scan(body: &ConvexBody, thetas: &[f64], depths: &[f64]) -> Result<MinChordReport> {
    let half_width = body.min_width() / 2.0;
    let mut best = f64::INFINITY;
    let mut worst = (0.0, 0.0);
    for &t in thetas {
        let dir = Direction::new(t);
        let sl = body.slicer(dir);
        let (a, b) = sl.support();
        for &d in depths {
            if !(d > 0.0) || d > half_width || d > b - a {
                return Err(Error::domain(format!(
                    "scan depth {d} outside (0, min_width/2]"
                )));
            }
            let ratio = sl.profile(a + d) / d;
            if ratio < best {
                best = ratio;
                worst = (t, d);
            }
        }
    }
    Ok(MinChordReport {
        c_hat: best,
        worst_theta: worst.0,
        worst_delta: worst.1,
    })
}

/// Regression estimate of the boundary's Hölder exponent from split chords:
/// fits log min_Θ min(γ−, γ+) against log δ and returns 1/slope − 1.
pub fn holder_estimate(body: &ConvexBody, depths: &[f64]) -> Result<f64> {
    if depths.len() < 3 {
        return Err(Error::Degenerate(
            "holder_estimate needs at least 3 depths".into(),
        ));
    }
    // the scan must include the normal directions of the least-regular
    // boundary points; cover [0, 2π) plus the exact axis poles.
    let mut thetas: Vec<f64> = (0..64)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / 64.0)
        .collect();
    thetas.push(std::f64::consts::FRAC_PI_2);
    thetas.push(3.0 * std::f64::consts::FRAC_PI_2);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &d in depths {
        let mut m = f64::INFINITY;
        for &t in &thetas {
            let sp = body.split_chord(Direction::new(t), d)?;
            m = m.min(sp.min());
        }
        if !(m > 0.0) {
            return Err(Error::Degenerate(format!("vanishing split chord at {d}")));
        }
        xs.push(d.ln());
        ys.push(m.ln());
    }
    let slope = ols_slope(&xs, &ys);
    Ok(1.0 / slope - 1.0)
}

fn ols_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests;
