use super::*;
use crate::rng;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn zoo() -> Vec<ConvexBody> {
    vec![
        make_body(BodySpec::Disk { r: 0.25 }).unwrap(),
        make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap(),
        make_body(BodySpec::RegularPolygon {
            k: 6,
            circumradius: 0.3,
        })
        .unwrap(),
        make_body(BodySpec::CSigma { sigma: 0.5 }).unwrap(),
        make_body(BodySpec::CSigma { sigma: 0.75 }).unwrap(),
        make_body(BodySpec::COne).unwrap(),
        make_body(BodySpec::Lens { sigma: 0.75 }).unwrap(),
    ]
}

#[test]
fn disk_area_and_support() {
    let b = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    assert!(close(b.area(), std::f64::consts::PI / 16.0, 1e-12));
    for i in 0..8 {
        let th = Direction::new(i as f64 * 0.7);
        let (a, bb) = b.support_interval(th);
        assert!(close(a, -0.25, 1e-12), "A={a}");
        assert!(close(bb, 0.25, 1e-12));
    }
}

#[test]
fn square_support() {
    let b = make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap();
    let (a, bb) = b.support_interval(Direction::new(0.0));
    assert!(close(a, -0.25, 1e-12) && close(bb, 0.25, 1e-12));
    let (a, bb) = b.support_interval(Direction::new(std::f64::consts::FRAC_PI_4));
    let d = 0.25 * std::f64::consts::SQRT_2;
    assert!(close(a, -d, 1e-12) && close(bb, d, 1e-12));
}

#[test]
fn spec_validation() {
    assert!(make_body(BodySpec::Disk { r: -1.0 }).is_err());
    assert!(make_body(BodySpec::RegularPolygon {
        k: 2,
        circumradius: 0.1
    })
    .is_err());
    assert!(make_body(BodySpec::CSigma { sigma: 1.0 }).is_err());
    assert!(make_body(BodySpec::CSigma { sigma: 0.3 }).is_err());
    // oversized bodies rescale instead of erroring
    let b = make_body(BodySpec::Disk { r: 3.0 }).unwrap();
    assert!(b.circumradius() <= 0.5 + 1e-12);
    assert!(close(b.scale(), 0.5 / 3.0, 1e-12));
}

#[test]
fn csigma_pole_boundary_matches_reference_graph() {
    // lower boundary is y = x² − 1 in reference units for sigma = 1/2
    let b = make_body(BodySpec::CSigma { sigma: 0.5 }).unwrap();
    let s = b.scale();
    for x in [0.05, 0.2, 0.4] {
        let u = b.upper_boundary(x * s) / s;
        assert!(close(u, 1.0 - x * x, 1e-12), "x={x} u={u}");
    }
}

#[test]
fn profile_examples() {
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    assert!(close(disk.profile(Direction::new(1.3), 0.0), 0.5, 1e-9));
    let sq = make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap();
    assert!(close(sq.profile(Direction::new(0.0), 0.0), 0.5, 1e-9));
    // c_sigma(1/2) vertical slice near the pole: x² = 0.01 → slice 0.2 (reference)
    let c = make_body(BodySpec::CSigma { sigma: 0.5 }).unwrap();
    let s = c.scale();
    let dir = Direction::new(std::f64::consts::FRAC_PI_2);
    let (a, _) = c.support_interval(dir);
    let got = c.profile(dir, a + 0.01 * s);
    assert!(close(got, 0.2 * s, 1e-9), "got {got}");
}

#[test]
fn chord_examples() {
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    let g = disk.chord(Direction::new(0.4), 0.125).unwrap();
    assert!(close(g, 3f64.sqrt() / 4.0, 1e-9));

    let sq = make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap();
    let g = sq
        .chord(Direction::new(std::f64::consts::FRAC_PI_2), 0.1)
        .unwrap();
    assert!(close(g, 0.5, 1e-9));
    let g = sq
        .chord(Direction::new(std::f64::consts::FRAC_PI_4), 0.1)
        .unwrap();
    assert!(close(g, 0.2, 1e-9), "corner chord {g}");

    // out-of-range depths are domain errors
    assert!(disk.chord(Direction::new(0.0), -0.1).is_err());
    assert!(disk.chord(Direction::new(0.0), 0.51).is_err());
}

#[test]
fn chord_at_zero_depth() {
    // strictly convex contact → 0; polygon edge normal → edge length
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    assert!(disk.chord(Direction::new(0.3), 0.0).unwrap() < 1e-9);
    let sq = make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap();
    let g = sq.chord(Direction::new(0.0), 0.0).unwrap();
    assert!(close(g, 0.5, 1e-9), "flat contact {g}");
}

#[test]
fn split_chord_examples() {
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    let sp = disk.split_chord(Direction::new(1.1), 0.1).unwrap();
    let expect = (0.25f64 * 0.25 - 0.15 * 0.15).sqrt();
    assert!(close(sp.minus_len, expect, 1e-9));
    assert!(close(sp.plus_len, expect, 1e-9));

    // c_one at the pole: (3/4)x² + (1/4)x = 1/16 → plus piece 1/6 (reference)
    let c1 = make_body(BodySpec::COne).unwrap();
    let s = c1.scale();
    let sp = c1
        .split_chord(Direction::new(std::f64::consts::FRAC_PI_2), s / 16.0)
        .unwrap();
    assert!(close(sp.plus_len, s / 6.0, 1e-9), "plus {}", sp.plus_len);
    let root = ((1.0f64 + 48.0 / 16.0).sqrt() - 1.0) / 6.0;
    assert!(close(sp.plus_len, root * s, 1e-9));

    // even pole of c_sigma: both pieces equal
    let c = make_body(BodySpec::CSigma { sigma: 0.5 }).unwrap();
    let s = c.scale();
    let sp = c
        .split_chord(Direction::new(std::f64::consts::FRAC_PI_2), 0.01 * s)
        .unwrap();
    assert!(close(sp.minus_len, 0.1 * s, 1e-9));
    assert!(close(sp.plus_len, 0.1 * s, 1e-9));
}

#[test]
fn split_pieces_sum_to_chord() {
    for b in zoo() {
        for i in 0..16 {
            let dir = Direction::new(0.37 + i as f64 * 0.41);
            let (a, bb) = b.support_interval(dir);
            let d = 0.2 * (bb - a);
            let sp = b.split_chord(dir, d).unwrap();
            let g = b.chord(dir, d).unwrap();
            assert!(
                close(sp.total(), g, 1e-9),
                "{:?} dir {} split {} chord {}",
                b.spec(),
                dir.theta(),
                sp.total(),
                g
            );
        }
    }
}

#[test]
fn contains_examples() {
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    assert!(disk.contains(Point::new(0.0, 0.0)));
    assert!(!disk.contains(Point::new(0.3, 0.0)));
    let c = make_body(BodySpec::CSigma { sigma: 0.75 }).unwrap();
    // boundary point on the graph (closed convention)
    let s = c.scale();
    let x = 0.3 * s;
    let y = c.upper_boundary(x);
    assert!(c.contains(Point::new(x, y)));
    assert!(c.contains(Point::new(x, -y)));
    assert!(!c.contains(Point::new(x, y + 1e-6)));
}

#[test]
fn area_matches_green_boundary_integral() {
    for b in zoo() {
        let ga = b.boundary_area();
        assert!(
            (ga - b.area()).abs() <= 1e-9 * b.area(),
            "{:?}: green {} vs area {}",
            b.spec(),
            ga,
            b.area()
        );
    }
}

#[test]
fn csigma_area_vs_rejection_sampling() {
    // independent oracle: rejection-sampling Monte Carlo on the bounding box
    let b = make_body(BodySpec::CSigma { sigma: 0.75 }).unwrap();
    let r = b.circumradius();
    let n = 4_000_000u64;
    let mut hits = 0u64;
    for k in 0..n {
        let x = (2.0 * rng::unit(11, 2 * k) - 1.0) * r;
        let y = (2.0 * rng::unit(11, 2 * k + 1) - 1.0) * r;
        if b.contains(Point::new(x, y)) {
            hits += 1;
        }
    }
    let est = 4.0 * r * r * hits as f64 / n as f64;
    // SE ≈ 4r²·sqrt(p(1-p)/n) ≈ 2.4e-4; allow 4 sigma
    assert!(
        (est - b.area()).abs() < 1e-3,
        "mc {est} vs area {}",
        b.area()
    );
}

#[test]
fn profile_concavity_midpoint() {
    for b in zoo() {
        let dir = Direction::new(0.93);
        let sl = b.slicer(dir);
        let (a, bb) = sl.support();
        let n = 1024;
        let f: Vec<f64> = (0..=n)
            .map(|i| sl.profile(a + (bb - a) * i as f64 / n as f64))
            .collect();
        for i in 0..=n - 2 {
            let mid = f[i + 1];
            assert!(
                mid >= (f[i] + f[i + 2]) / 2.0 - 1e-9,
                "{:?} concavity fails at {i}",
                b.spec()
            );
        }
    }
}

#[test]
fn profile_integrates_to_area() {
    for b in zoo() {
        for k in 0..32 {
            let dir = Direction::new(2.0 * std::f64::consts::PI * rng::unit(5, k));
            let sl = b.slicer(dir);
            let (a, bb) = sl.support();
            let n = 100_000;
            let h = (bb - a) / n as f64;
            let mut s = 0.0;
            for i in 0..n {
                s += sl.profile(a + (i as f64 + 0.5) * h);
            }
            s *= h;
            assert!(
                (s - b.area()).abs() <= 1e-7 * b.area(),
                "{:?} dir {}: ∫profile {} area {}",
                b.spec(),
                dir.theta(),
                s,
                b.area()
            );
        }
    }
}

#[test]
fn chord_direction_canonicalization_exact() {
    let b = make_body(BodySpec::CSigma { sigma: 0.75 }).unwrap();
    let t = 1.2345;
    let g1 = b.chord(Direction::new(t), 0.07).unwrap();
    let g2 = b
        .chord(Direction::new(t + 2.0 * std::f64::consts::PI), 0.07)
        .unwrap();
    assert_eq!(g1, g2);
}

#[test]
fn central_symmetry_of_chords() {
    for b in zoo() {
        if !b.axis_symmetric() {
            continue;
        }
        for i in 0..12 {
            let dir = Direction::new(0.21 + i as f64 * 0.5);
            let d = 0.1 * b.circumradius();
            let g1 = b.chord(dir, d).unwrap();
            let g2 = b.chord(dir.opposite(), d).unwrap();
            assert!(close(g1, g2, 1e-9), "{:?} {g1} {g2}", b.spec());
        }
    }
}

#[test]
fn min_chord_scan_positive_for_zoo() {
    for b in zoo() {
        let half = b.min_width() / 2.0;
        let thetas: Vec<f64> = (0..64)
            .map(|i| 2.0 * std::f64::consts::PI * i as f64 / 64.0)
            .collect();
        let depths: Vec<f64> = (1..=8).map(|i| half * i as f64 / 8.0).collect();
        let rep = min_chord_scan(&b, &thetas, &depths).unwrap();
        assert!(rep.c_hat > 0.0, "{:?} c_hat {}", b.spec(), rep.c_hat);
    }
}

#[test]
fn min_chord_scan_disk_and_square() {
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    let thetas: Vec<f64> = (0..32).map(|i| i as f64 * 0.2).collect();
    let depths: Vec<f64> = (1..=10).map(|i| 0.01 * i as f64).collect();
    let rep = min_chord_scan(&disk, &thetas, &depths).unwrap();
    assert!(rep.c_hat >= 1.0, "disk c_hat {}", rep.c_hat);

    // square: worst ratio near the diagonal, chord = 2δ
    let sq = make_body(BodySpec::AxisSquare { side: 0.5 }).unwrap();
    let mut thetas = vec![std::f64::consts::FRAC_PI_4];
    for i in 0..32 {
        thetas.push(i as f64 * 0.19);
    }
    let rep = min_chord_scan(&sq, &thetas, &depths).unwrap();
    assert!(close(rep.c_hat, 2.0, 1e-6), "square c_hat {}", rep.c_hat);
}

#[test]
fn holder_estimate_disk_and_csigma() {
    let depths: Vec<f64> = (6..=14).map(|k| 2f64.powi(-k)).collect();
    let disk = make_body(BodySpec::Disk { r: 0.25 }).unwrap();
    let a = holder_estimate(&disk, &depths).unwrap();
    assert!(close(a, 1.0, 0.1), "disk alpha {a}");

    let c = make_body(BodySpec::CSigma { sigma: 0.75 }).unwrap();
    let a = holder_estimate(&c, &depths).unwrap();
    assert!(close(a, 1.0 / 0.75 - 1.0, 0.1), "c3/4 alpha {a}");

    let c = make_body(BodySpec::CSigma { sigma: 0.5 }).unwrap();
    let a = holder_estimate(&c, &depths).unwrap();
    assert!(close(a, 1.0, 0.1), "c1/2 alpha {a}");
}

#[test]
fn csigma_chord_asymptotics_window() {
    // pole regime: chord(π/2, δ) = 2δ^σ exactly in reference units
    for sigma in [0.6, 0.75, 0.9] {
        let b = make_body(BodySpec::CSigma { sigma }).unwrap();
        let s = b.scale();
        let dir = Direction::new(std::f64::consts::FRAC_PI_2);
        for k in (8..=20).step_by(4) {
            let d = 2f64.powi(-k);
            let g = b.chord(dir, d * s).unwrap() / s;
            let ratio = g / d.powf(sigma);
            assert!(close(ratio, 2.0, 1e-6), "sigma {sigma} d {d} ratio {ratio}");
        }
        // oblique regime: ratio to δ^{1/2}(θ−π/2)^{(2σ−1)/(2(1−σ))} within [1/10, 10]
        let dt = 0.1;
        let dir = Direction::new(std::f64::consts::FRAC_PI_2 + dt);
        let expo = (2.0 * sigma - 1.0) / (2.0 * (1.0 - sigma));
        for k in (10..=20).step_by(5) {
            let d = 2f64.powi(-k);
            let g = b.chord(dir, d * s).unwrap() / s;
            let f = d.sqrt() * dt.powf(expo);
            let ratio = g / f;
            assert!(
                ratio > 0.1 && ratio < 10.0,
                "sigma {sigma} d {d} ratio {ratio}"
            );
        }
    }
}

#[test]
fn custom_profile_polygon() {
    // constant support = regular polygon circumscribing a disk
    let n = 16;
    let b = make_body(BodySpec::CustomProfile {
        support: vec![0.3; n],
    })
    .unwrap();
    assert!(b.contains(Point::new(0.0, 0.0)));
    // support of the built polygon at a tabulated angle equals the input
    let (_, bb) = b.support_interval(Direction::new(0.0));
    assert!(close(bb, 0.3, 1e-9), "support {bb}");
}
