//! Quadrature helpers: Gauss–Legendre nodes, endpoint-graded composite
//! integration, pairwise summation.

/// Gauss–Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// ∫_a^b f
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite integral over [a, b] with geometric grading into both
/// endpoints (handles square-root–type endpoint singularities of the
/// integrand's derivatives).
pub fn integrate_graded(
    a: f64,
    b: f64,
    levels: u32,
    gl: &GaussLegendre,
    mut f: impl FnMut(f64) -> f64,
) -> f64 {
    if !(b > a) {
        return 0.0;
    }
    let half = 0.5 * (b - a);
    let mut edges = Vec::with_capacity(2 * levels as usize + 2);
    edges.push(a);
    let mut d = half * 0.5f64.powi(levels as i32);
    while d < half * 0.75 {
        edges.push(a + d);
        d *= 2.0;
    }
    let mut d = half * 0.5f64.powi(levels as i32);
    let mut right = vec![b];
    while d < half * 0.75 {
        right.push(b - d);
        d *= 2.0;
    }
    right.reverse();
    edges.extend(right);
    let mut total = 0.0;
    for w in edges.windows(2) {
        total += gl.integrate(w[0], w[1], &mut f);
    }
    total
}

/// Pairwise (cascade) summation; deterministic for a fixed input order and
/// accurate to O(log n) rounding growth.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
