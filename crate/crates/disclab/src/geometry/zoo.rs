//! The body zoo: constructors for every supported `BodySpec`.
//!
//! All bodies are stored centroid-centered and rescaled so the circumradius
//! is at most 1/2 (every dilate λC, λ ≤ 1, then fits a fundamental torus
//! cell). `ConvexBody::scale` records the factor applied to the family's
//! reference frame, so chord asymptotics can be read off in reference units.
//!
//! The σ-family is glued from closed forms. In reference units the
//! lower-right boundary is the graph y = φ(x) − 1 on [0, x₀] with
//! φ(x) = x^{1/σ} (or (3/4)x² + (1/4)x for the σ = 1 corner body); at
//! P₀ = (x₀, φ(x₀) − 1) the unique circle tangent there whose far end meets
//! the positive x-axis with a vertical tangent closes the quadrant, and the
//! other three quadrants are reflections. The tangent angle is monotone along
//! the chain, so the glued body is convex; the junction has a curvature jump,
//! which affects no chord or decay order.

use super::piece::{CirclePiece, Piece, PowerPiece, SegPiece};
use super::{ConvexBody, Point, Shape, UpperKind, UpperPiece};
use crate::error::{Error, Result};

/// Gluing abscissa for the σ-family, in reference units.
pub const SIGMA_FAMILY_X0: f64 = 0.5;

/// Specification of a body in the zoo.
#[derive(Clone, Debug, PartialEq)]
pub enum BodySpec {
    Disk { r: f64 },
    AxisSquare { side: f64 },
    RegularPolygon { k: u32, circumradius: f64 },
    CSigma { sigma: f64 },
    COne,
    Lens { sigma: f64 },
    /// Convex polygon cut by tabulated support values h(θ_i) at n uniform
    /// angles θ_i = 2πi/n.
    CustomProfile { support: Vec<f64> },
}

impl BodySpec {
    /// Compact textual tag, used in CSV/JSON output and cache digests.
    pub fn tag(&self) -> String {
        match self {
            BodySpec::Disk { r } => format!("disk(r={r:.17e})"),
            BodySpec::AxisSquare { side } => format!("axis_square(side={side:.17e})"),
            BodySpec::RegularPolygon { k, circumradius } => {
                format!("regular_polygon(k={k},r={circumradius:.17e})")
            }
            BodySpec::CSigma { sigma } => format!("c_sigma(sigma={sigma:.17e})"),
            BodySpec::COne => "c_one".to_string(),
            BodySpec::Lens { sigma } => format!("lens(sigma={sigma:.17e})"),
            BodySpec::CustomProfile { support } => {
                format!("custom_profile(n={})", support.len())
            }
        }
    }
}

/// Build the body for `spec`, rescaling to circumradius ≤ 1/2.
pub fn make_body(spec: BodySpec) -> Result<ConvexBody> {
    match &spec {
        BodySpec::Disk { r } => {
            if !(*r > 0.0) {
                return Err(Error::invalid("disk radius must be positive"));
            }
            let s = rescale_factor(*r);
            Ok(disk_body(spec.clone(), r * s, s))
        }
        BodySpec::AxisSquare { side } => {
            if !(*side > 0.0) {
                return Err(Error::invalid("square side must be positive"));
            }
            let circ = side / 2.0 * std::f64::consts::SQRT_2;
            let s = rescale_factor(circ);
            let h = side * s / 2.0;
            let verts = vec![
                Point::new(h, h),
                Point::new(-h, h),
                Point::new(-h, -h),
                Point::new(h, -h),
            ];
            Ok(polygon_body(spec.clone(), verts, s, true))
        }
        BodySpec::RegularPolygon { k, circumradius } => {
            if *k < 3 {
                return Err(Error::invalid("polygon needs k >= 3 vertices"));
            }
            if !(*circumradius > 0.0) {
                return Err(Error::invalid("polygon circumradius must be positive"));
            }
            let s = rescale_factor(*circumradius);
            let rr = circumradius * s;
            let n = *k as usize;
            let verts: Vec<Point> = (0..n)
                .map(|i| {
                    let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                    Point::new(rr * a.cos(), rr * a.sin())
                })
                .collect();
            // with a vertex at angle 0 the polygon is x-symmetric for all k
            // and y-symmetric iff k is even
            let axis_sym = *k % 2 == 0;
            Ok(polygon_body(spec.clone(), verts, s, axis_sym))
        }
        BodySpec::CSigma { sigma } => {
            if !(*sigma >= 0.5 && *sigma < 1.0) {
                return Err(Error::invalid("c_sigma requires sigma in [1/2, 1)"));
            }
            Ok(glued_family_body(spec.clone(), 1.0 / sigma, 0.0, 1.0))
        }
        BodySpec::COne => Ok(glued_family_body(spec.clone(), 2.0, 0.25, 0.75)),
        BodySpec::Lens { sigma } => {
            if !(*sigma >= 0.5 && *sigma < 1.0) {
                return Err(Error::invalid("lens requires sigma in [1/2, 1)"));
            }
            Ok(lens_body(spec.clone(), 1.0 / sigma))
        }
        BodySpec::CustomProfile { support } => {
            if support.len() < 3 {
                return Err(Error::invalid("custom_profile needs >= 3 support values"));
            }
            if support.iter().any(|h| !(*h > 0.0) || !h.is_finite()) {
                return Err(Error::invalid("support values must be positive and finite"));
            }
            custom_profile_body(spec.clone())
        }
    }
}

fn rescale_factor(circumradius: f64) -> f64 {
    if circumradius > 0.5 {
        0.5 / circumradius
    } else {
        1.0
    }
}

fn disk_body(spec: BodySpec, r: f64, scale: f64) -> ConvexBody {
    use std::f64::consts::FRAC_PI_2;
    let pieces: Vec<Piece> = (0..4)
        .map(|i| {
            Piece::Circle(CirclePiece {
                cx: 0.0,
                cy: 0.0,
                r,
                a0: i as f64 * FRAC_PI_2,
                a1: (i + 1) as f64 * FRAC_PI_2,
            })
        })
        .collect();
    let area = std::f64::consts::PI * r * r;
    ConvexBody::assemble(spec, pieces, Shape::Disk { r }, area, r, scale, true)
}

fn polygon_body(spec: BodySpec, verts: Vec<Point>, scale: f64, axis_sym: bool) -> ConvexBody {
    // centroid-center the vertex set
    let (cx, cy, area) = polygon_centroid_area(&verts);
    let verts: Vec<Point> = verts
        .iter()
        .map(|v| Point::new(v.x - cx, v.y - cy))
        .collect();
    let n = verts.len();
    let pieces: Vec<Piece> = (0..n)
        .map(|i| {
            Piece::Seg(SegPiece {
                a: verts[i],
                b: verts[(i + 1) % n],
            })
        })
        .collect();
    let circ = verts.iter().map(|v| v.norm()).fold(0.0, f64::max);
    ConvexBody::assemble(
        spec,
        pieces,
        Shape::Poly {
            verts: verts.clone(),
        },
        area,
        circ,
        scale,
        axis_sym,
    )
}

/// Signed area and centroid of a ccw polygon (shoelace).
fn polygon_centroid_area(verts: &[Point]) -> (f64, f64, f64) {
    let n = verts.len();
    let mut a2 = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let p = verts[i];
        let q = verts[(i + 1) % n];
        let w = p.x * q.y - q.x * p.y;
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    let area = a2 / 2.0;
    (cx / (6.0 * area), cy / (6.0 * area), area.abs())
}

/// Shared geometry of the glued σ-family in reference units.
pub struct GluedFamily {
    /// reference-frame boundary function φ(x) = lin·x + pow·x^p (lower
    /// boundary is φ(x) − 1)
    pub p: f64,
    pub lin: f64,
    pub pow: f64,
    pub x0: f64,
    /// depth of the gluing point: y0 = φ(x0) − 1 < 0
    pub y0: f64,
    /// boundary slope at the gluing point
    pub m0: f64,
    /// closing arc: center (ox, 0), radius r
    pub ox: f64,
    pub r: f64,
    /// equator half-width
    pub xmax: f64,
}

impl GluedFamily {
    pub fn new(p: f64, lin: f64, pow: f64) -> Self {
        let x0 = SIGMA_FAMILY_X0;
        let y0 = lin * x0 + pow * x0.powf(p) - 1.0;
        let m0 = lin + pow * p * x0.powf(p - 1.0);
        let hyp = (1.0 + m0 * m0).sqrt();
        let r = -y0 * hyp;
        let ox = x0 - r * m0 / hyp;
        GluedFamily {
            p,
            lin,
            pow,
            x0,
            y0,
            m0,
            ox,
            r,
            xmax: ox + r,
        }
    }
}

/// C_σ (lin = 0, pow = 1, p = 1/σ) and C₁ (lin = 1/4, pow = 3/4, p = 2).
fn glued_family_body(spec: BodySpec, p: f64, lin: f64, pow: f64) -> ConvexBody {
    let fam = GluedFamily::new(p, lin, pow);
    let scale = 0.5; // poles sit at distance 1 in reference units
    let s = scale;

    // scaled graph coefficients: y_s = s·(c0 + lin·(x/s) + pow·(x/s)^p)
    let c0 = -s;
    let c1 = lin;
    let c2 = pow * s.powf(1.0 - p);
    let x0s = fam.x0 * s;
    let oxs = fam.ox * s;
    let rs = fam.r * s;
    let xmaxs = fam.xmax * s;
    let y0s = fam.y0 * s;

    let phi_p = (y0s - 0.0).atan2(x0s - oxs); // angle of P0 on the closing arc
    // world-unit graph: y_w(x_w) = c0 + c1·x_w + c2·x_w^p (valid x_w ≥ 0)
    let gpiece = |sx: f64, sy: f64, xa: f64, xb: f64| {
        Piece::Power(PowerPiece {
            c0,
            c1,
            c2,
            p,
            xa,
            xb,
            sx,
            sy,
        })
    };
    let arc = |cx: f64, a0: f64, a1: f64| {
        Piece::Circle(CirclePiece {
            cx,
            cy: 0.0,
            r: rs,
            a0,
            a1,
        })
    };

    use std::f64::consts::PI;
    // ccw chain from the south pole (0, −s)
    let pieces = vec![
        gpiece(1.0, 1.0, 0.0, x0s),             // pole -> P0 (lower right)
        arc(oxs, phi_p, 0.0),                   // P0 -> (xmax, 0)
        arc(oxs, 0.0, -phi_p),                  // (xmax,0) -> mirrored P0
        gpiece(1.0, -1.0, x0s, 0.0),            // -> north pole
        gpiece(-1.0, -1.0, 0.0, x0s),           // north pole -> upper-left P0
        arc(-oxs, PI + phi_p, PI),              // -> (−xmax, 0)
        arc(-oxs, PI, PI - phi_p),              // -> lower-left P0
        gpiece(-1.0, 1.0, x0s, 0.0),            // -> south pole
    ];

    // area: 4 ∫₀^{xmax} U(x) dx in world units
    let graph_int = -(c0 * x0s + c1 * x0s * x0s / 2.0 + c2 * x0s.powf(p + 1.0) / (p + 1.0));
    let arc_int = {
        let f = |x: f64| {
            let u = x - oxs;
            0.5 * (u * (rs * rs - u * u).max(0.0).sqrt() + rs * rs * (u / rs).asin())
        };
        f(xmaxs) - f(x0s)
    };
    let area = 4.0 * (graph_int + arc_int);

    let upper = vec![
        UpperPiece {
            x_hi: x0s,
            kind: UpperKind::Power {
                c0: -c0,
                c1: -c1,
                c2: -c2,
                p,
            },
        },
        UpperPiece {
            x_hi: xmaxs,
            kind: UpperKind::Circle { ox: oxs, r: rs },
        },
    ];
    ConvexBody::assemble(
        spec,
        pieces,
        Shape::SymGraph { upper, xmax: xmaxs },
        area,
        s, // poles dominate: circumradius = s·1
        scale,
        true,
    )
}

/// lens(σ): {(x,y): |y| ≤ 1 − |x|^{1/σ}} in reference units, corners at (±1, 0).
fn lens_body(spec: BodySpec, p: f64) -> ConvexBody {
    let scale = 0.5;
    let s = scale;
    // world-unit upper graph: U(x) = s − s^{1−p}·x^p
    let c0 = s;
    let c2 = -(s.powf(1.0 - p));
    let gpiece = |sx: f64, sy: f64, xa: f64, xb: f64| {
        Piece::Power(PowerPiece {
            c0,
            c1: 0.0,
            c2,
            p,
            xa,
            xb,
            sx,
            sy,
        })
    };
    // ccw chain through corners (±s, 0) and poles (0, ±s)
    let pieces = vec![
        gpiece(1.0, 1.0, s, 0.0),   // (s,0) -> north pole
        gpiece(-1.0, 1.0, 0.0, s),  // north pole -> (−s,0)
        gpiece(-1.0, -1.0, s, 0.0), // (−s,0) -> south pole
        gpiece(1.0, -1.0, 0.0, s),  // south pole -> (s,0)
    ];
    let area = 4.0 * (c0 * s + c2 * s.powf(p + 1.0) / (p + 1.0));
    let upper = vec![UpperPiece {
        x_hi: s,
        kind: UpperKind::Power {
            c0,
            c1: 0.0,
            c2,
            p,
        },
    }];
    ConvexBody::assemble(
        spec,
        pieces,
        Shape::SymGraph {
            upper,
            xmax: s,
        },
        area,
        s,
        scale,
        true,
    )
}

/// Polygon cut by tabulated support half-planes x·Θ_i ≤ h_i.
fn custom_profile_body(spec: BodySpec) -> Result<ConvexBody> {
    let support = match &spec {
        BodySpec::CustomProfile { support } => support.clone(),
        _ => unreachable!(),
    };
    let n = support.len();
    let mut verts = Vec::with_capacity(n);
    for i in 0..n {
        let a0 = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        let a1 = 2.0 * std::f64::consts::PI * ((i + 1) % n) as f64 / n as f64;
        // intersection of x·Θ(a0) = h0 with x·Θ(a1) = h1
        let (c0, s0) = (a0.cos(), a0.sin());
        let (c1v, s1) = (a1.cos(), a1.sin());
        let det = c0 * s1 - c1v * s0;
        if det.abs() < 1e-12 {
            return Err(Error::invalid("support angles too close"));
        }
        let h0 = support[i];
        let h1 = support[(i + 1) % n];
        verts.push(Point::new(
            (h0 * s1 - h1 * s0) / det,
            (c0 * h1 - c1v * h0) / det,
        ));
    }
    // convexity check: ccw turns only
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let c = verts[(i + 2) % n];
        let cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if cross <= 0.0 {
            return Err(Error::invalid(
                "tabulated support is not the support function of a convex body",
            ));
        }
    }
    let circ = verts.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let s = rescale_factor(circ);
    let verts: Vec<Point> = verts.iter().map(|v| Point::new(v.x * s, v.y * s)).collect();
    Ok(polygon_body(spec, verts, s, false))
}
