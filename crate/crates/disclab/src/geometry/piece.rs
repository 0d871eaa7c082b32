//! Boundary pieces: closed-form arcs that compose a convex boundary.
//!
//! Every zoo body is a closed ccw chain of three arc kinds:
//! - `Power`: a graph y = c0 + c1·x + c2·x^p over x ∈ [0,∞), reflected into
//!   place by sign flips (covers the |x|^{1/σ} family and parabola+corner
//!   boundaries),
//! - `Circle`: a circular arc,
//! - `Seg`: a straight segment (polygons).
//!
//! Each kind exposes closed forms for endpoints, directional extrema of
//! x·Θ, the Green's-theorem area term ∮x dy, and monotone sub-spans for the
//! slice solver. The chain convention is counterclockwise with the body on
//! the left.

use super::Point;

/// Graph piece y(x) = c0 + c1·x + c2·x^p, world = (sx·x, sy·y(x)),
/// traversed from x = xa to x = xb (xa > xb encodes reversed traversal).
/// Domain is x ≥ 0 so the |x|-families stay single-valued; p > 1.
#[derive(Clone, Copy, Debug)]
pub struct PowerPiece {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub p: f64,
    pub xa: f64,
    pub xb: f64,
    pub sx: f64,
    pub sy: f64,
}

impl PowerPiece {
    #[inline]
    fn y(&self, x: f64) -> f64 {
        self.c0 + self.c1 * x + self.c2 * x.powf(self.p)
    }

    #[inline]
    fn dy_dx(&self, x: f64) -> f64 {
        self.c1 + self.c2 * self.p * x.powf(self.p - 1.0)
    }

    #[inline]
    fn world(&self, x: f64) -> Point {
        Point::new(self.sx * x, self.sy * self.y(x))
    }
}

/// Circular arc, angle parameter from a0 to a1 (either direction, |span| < 2π).
#[derive(Clone, Copy, Debug)]
pub struct CirclePiece {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub a0: f64,
    pub a1: f64,
}

impl CirclePiece {
    #[inline]
    fn world(&self, phi: f64) -> Point {
        Point::new(self.cx + self.r * phi.cos(), self.cy + self.r * phi.sin())
    }
}

/// Straight segment from a to b.
#[derive(Clone, Copy, Debug)]
pub struct SegPiece {
    pub a: Point,
    pub b: Point,
}

#[derive(Clone, Copy, Debug)]
pub enum Piece {
    Power(PowerPiece),
    Circle(CirclePiece),
    Seg(SegPiece),
}

impl Piece {
    /// Endpoints in traversal order.
    pub fn endpoints(&self) -> (Point, Point) {
        match self {
            Piece::Power(g) => (g.world(g.xa), g.world(g.xb)),
            Piece::Circle(c) => (c.world(c.a0), c.world(c.a1)),
            Piece::Seg(s) => (s.a, s.b),
        }
    }

    /// Point at normalized parameter u ∈ [0,1] along the traversal.
    pub fn at(&self, u: f64) -> Point {
        match self {
            Piece::Power(g) => g.world(g.xa + u * (g.xb - g.xa)),
            Piece::Circle(c) => c.world(c.a0 + u * (c.a1 - c.a0)),
            Piece::Seg(s) => Point::new(s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y)),
        }
    }

    /// Interior parameters where d/du (P(u)·th) = 0. At most two.
    pub fn dot_critical(&self, th: Point) -> Vec<f64> {
        let mut out = Vec::new();
        match self {
            Piece::Power(g) => {
                // d/dx [sx·x·tx + sy·y(x)·ty] = sx·tx + sy·ty·y'(x)
                let a = g.sy * th.y;
                if a.abs() > 1e-300 {
                    let m = -(g.sx * th.x) / a; // want y'(x) = m
                    let rhs = (m - g.c1) / (g.c2 * g.p);
                    if rhs > 0.0 {
                        let xs = rhs.powf(1.0 / (g.p - 1.0));
                        let (lo, hi) = if g.xa < g.xb { (g.xa, g.xb) } else { (g.xb, g.xa) };
                        if xs > lo && xs < hi {
                            out.push((xs - g.xa) / (g.xb - g.xa));
                        }
                    }
                }
            }
            Piece::Circle(c) => {
                // d/dphi = r(−sin·tx + cos·ty) = 0 at phi ≡ atan2(ty,tx) mod π
                let base = th.y.atan2(th.x);
                let (lo, hi) = if c.a0 < c.a1 { (c.a0, c.a1) } else { (c.a1, c.a0) };
                for k in -4i32..=4 {
                    for half in 0..2 {
                        let phi = base + (k as f64) * std::f64::consts::PI * 2.0
                            + (half as f64) * std::f64::consts::PI;
                        if phi > lo && phi < hi {
                            out.push((phi - c.a0) / (c.a1 - c.a0));
                        }
                    }
                }
            }
            Piece::Seg(_) => {}
        }
        out.retain(|u| *u > 0.0 && *u < 1.0);
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        out
    }

    /// Green's-theorem area contribution ∮ x dy along the traversal.
    pub fn area_term(&self) -> f64 {
        match self {
            Piece::Power(g) => {
                // ∫ (sx x) sy y'(x) dx = sx sy [c1 x²/2 + c2 p x^{p+1}/(p+1)]
                let f = |x: f64| {
                    g.c1 * x * x / 2.0 + g.c2 * g.p * x.powf(g.p + 1.0) / (g.p + 1.0)
                };
                g.sx * g.sy * (f(g.xb) - f(g.xa))
            }
            Piece::Circle(c) => {
                // ∫ (cx + r cos φ) r cos φ dφ
                let f = |phi: f64| {
                    c.cx * c.r * phi.sin() + c.r * c.r * (phi / 2.0 + (2.0 * phi).sin() / 4.0)
                };
                f(c.a1) - f(c.a0)
            }
            Piece::Seg(s) => (s.b.y - s.a.y) * (s.a.x + s.b.x) / 2.0,
        }
    }

    /// Largest distance from the origin over the piece.
    pub fn max_radius(&self) -> f64 {
        let (pa, pb) = self.endpoints();
        let mut r = pa.norm().max(pb.norm());
        // interior extrema of |P|² found by coarse scan + refinement; pieces
        // are short and smooth, 64 samples suffice to bracket.
        let mut prev = self.at(0.0).norm();
        for i in 1..=64 {
            let u = i as f64 / 64.0;
            let cur = self.at(u).norm();
            r = r.max(cur.max(prev));
            prev = cur;
        }
        r
    }
}

/// A maximal sub-span of a piece on which u ↦ P(u)·Θ is monotone.
#[derive(Clone, Copy, Debug)]
pub struct MonotoneSpan {
    pub piece: usize,
    pub u0: f64,
    pub u1: f64,
    pub d0: f64,
    pub d1: f64,
}

impl MonotoneSpan {
    #[inline]
    pub fn lo(&self) -> f64 {
        self.d0.min(self.d1)
    }
    #[inline]
    pub fn hi(&self) -> f64 {
        self.d0.max(self.d1)
    }
}
