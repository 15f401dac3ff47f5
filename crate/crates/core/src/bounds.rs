//! Closed-form eigenvalue bounds with explicit precondition flags.
//!
//! Each bound is pure arithmetic in the geometric inputs; preconditions are
//! recorded, never silently assumed. A bound with an unmet precondition is
//! advisory: callers must not assert it against solved eigenvalues.

use serde::Serialize;
use std::f64::consts::PI;

/// Universal constant of the hole-count upper bound.
pub const HOLE_BOUND_CONSTANT: f64 = 544.0 * PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Serialize)]
pub struct Precondition {
    pub desc: String,
    pub met: bool,
}

/// A named eigenvalue bound (units 1/length^2) with precondition flags and
/// the inputs it was computed from.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub kind: BoundKind,
    pub value: f64,
    pub preconditions: Vec<Precondition>,
    pub inputs: Vec<(String, f64)>,
}

impl BoundReport {
    /// True when every precondition is met; only then may the value be
    /// asserted against a solved eigenvalue.
    pub fn asserted(&self) -> bool {
        self.preconditions.iter().all(|p| p.met)
    }
}

fn pc(desc: &str, met: bool) -> Precondition {
    Precondition {
        desc: desc.to_string(),
        met,
    }
}

fn input(name: &str, v: f64) -> (String, f64) {
    (name.to_string(), v)
}

/// Upper bound 544*pi*n/area from the hole count alone; zero when the domain
/// is simply connected (every closed potential is then exact).
pub fn ub_holes(n: usize, area: f64) -> BoundReport {
    let value = if n == 0 {
        0.0
    } else {
        HOLE_BOUND_CONSTANT * n as f64 / area
    };
    BoundReport {
        name: "ub_holes".into(),
        kind: BoundKind::Upper,
        value,
        preconditions: vec![pc("area > 0", area > 0.0)],
        inputs: vec![input("n", n as f64), input("area", area)],
    }
}

/// Lower bound dphi^2 / (64 eps^2) for a punctured convex domain over a
/// maximal eps-net. Precondition flags are supplied by the caller from the
/// geometry (convexity, smooth boundary with interior-ball radius above eps,
/// net maximality, equal fluxes).
pub fn lb_eps_net(epsilon: f64, dphi: f64, flags: EpsNetFlags) -> BoundReport {
    let value = dphi * dphi / (64.0 * epsilon * epsilon);
    BoundReport {
        name: "lb_eps_net".into(),
        kind: BoundKind::Lower,
        value,
        preconditions: flags.into_preconditions(),
        inputs: vec![input("epsilon", epsilon), input("dphi", dphi)],
    }
}

/// Count form of the eps-net lower bound: pi*n*dphi^2 / (256*area).
pub fn lb_eps_net_count(n: usize, area: f64, dphi: f64, flags: EpsNetFlags) -> BoundReport {
    let value = PI * n as f64 * dphi * dphi / (256.0 * area);
    BoundReport {
        name: "lb_eps_net_count".into(),
        kind: BoundKind::Lower,
        value,
        preconditions: flags.into_preconditions(),
        inputs: vec![input("n", n as f64), input("area", area), input("dphi", dphi)],
    }
}

/// Hypotheses of the eps-net lower bound, evaluated by the caller.
#[derive(Debug, Clone, Copy)]
pub struct EpsNetFlags {
    pub convex: bool,
    /// Interior-ball radius strictly above epsilon (smooth boundary).
    pub delta_above_eps: bool,
    /// The point set is a maximal eps-net (certified against a probe grid).
    pub maximal_net: bool,
    /// Equal fluxes around every puncture; with unequal fluxes the minimal
    /// integer distance must be used for dphi, which the caller asserts.
    pub flux_form_valid: bool,
}

impl EpsNetFlags {
    pub fn all_met() -> Self {
        EpsNetFlags {
            convex: true,
            delta_above_eps: true,
            maximal_net: true,
            flux_form_valid: true,
        }
    }

    fn into_preconditions(self) -> Vec<Precondition> {
        vec![
            pc("domain convex", self.convex),
            pc("interior-ball radius delta > epsilon", self.delta_above_eps),
            pc("maximal epsilon-net", self.maximal_net),
            pc("flux distance form valid", self.flux_form_valid),
        ]
    }
}

/// Upper bound (8 pi n / area) * sum_j 1/|ln(h_j/2)| from an admissible cut
/// with per-segment lengths `h_list`.
pub fn ub_cut(n: usize, area: f64, h_list: &[f64]) -> BoundReport {
    let sum: f64 = h_list.iter().map(|&h| 1.0 / (h / 2.0).ln().abs()).sum();
    let value = 8.0 * PI * n as f64 / area * sum;
    let total: f64 = h_list.iter().sum();
    let mut preconditions = vec![
        pc("cut total <= area/(2 pi)", total <= area / (2.0 * PI)),
        pc("every h_j <= 1", h_list.iter().all(|&h| h <= 1.0)),
        pc("cut nonempty", !h_list.is_empty()),
    ];
    preconditions.push(pc("every h_j > 0", h_list.iter().all(|&h| h > 0.0)));
    let mut inputs = vec![
        input("n", n as f64),
        input("area", area),
        input("h_total", total),
    ];
    for (j, &h) in h_list.iter().enumerate() {
        inputs.push(input(&format!("h_{j}"), h));
    }
    BoundReport {
        name: "ub_cut".into(),
        kind: BoundKind::Upper,
        value,
        preconditions,
        inputs,
    }
}

/// Aggregate form (8 pi n^2 / area) / |ln(h_total/n)|, valid when every
/// segment length is at most e^-2 (caller-asserted via the flag).
pub fn ub_cut_aggregate(n: usize, area: f64, h_total: f64, each_below_e2: bool) -> BoundReport {
    let value = 8.0 * PI * (n * n) as f64 / area / (h_total / n as f64).ln().abs();
    BoundReport {
        name: "ub_cut_aggregate".into(),
        kind: BoundKind::Upper,
        value,
        preconditions: vec![
            pc("every h_j <= e^-2", each_below_e2),
            pc(
                "h_total <= n e^-2",
                h_total <= n as f64 * (-2.0f64).exp(),
            ),
        ],
        inputs: vec![
            input("n", n as f64),
            input("area", area),
            input("h_total", h_total),
        ],
    }
}

/// Doubly-connected special case: 8 pi / (area * |ln(h/2)|) with
/// h <= min(1, area/(2 pi)).
pub fn ub_doubly_connected(area: f64, h: f64) -> BoundReport {
    let value = 8.0 * PI / (area * (h / 2.0).ln().abs());
    BoundReport {
        name: "ub_doubly_connected".into(),
        kind: BoundKind::Upper,
        value,
        preconditions: vec![pc(
            "h <= min(1, area/(2 pi))",
            h <= 1.0f64.min(area / (2.0 * PI)),
        )],
        inputs: vec![input("area", area), input("h", h)],
    }
}

/// Annulus lower bound 4 pi^2 beta^2 dphi^2 / (|dF|^2 B^2) for F \ G with
/// both curves convex.
pub fn lb_annulus(perim_f: f64, beta: f64, b_max: f64, dphi: f64, convex: bool) -> BoundReport {
    let value = 4.0 * PI * PI / (perim_f * perim_f) * (beta * beta) / (b_max * b_max)
        * dphi
        * dphi;
    BoundReport {
        name: "lb_annulus".into(),
        kind: BoundKind::Lower,
        value,
        preconditions: vec![
            pc("inner and outer curves convex", convex),
            pc("beta <= B", beta <= b_max),
        ],
        inputs: vec![
            input("perim_F", perim_f),
            input("beta", beta),
            input("B", b_max),
            input("dphi", dphi),
        ],
    }
}

/// Sharper annulus lower bound with linear beta/B dependence:
/// (pi^2/8) |F|^2 beta dphi^2 / (|dF|^2 D(F)^4 B).
pub fn lb_annulus_sharp(
    area_f: f64,
    perim_f: f64,
    diam_f: f64,
    beta: f64,
    b_max: f64,
    dphi: f64,
    convex: bool,
) -> BoundReport {
    let value = PI * PI / 8.0 * (area_f * area_f)
        / (perim_f * perim_f * diam_f.powi(4))
        * (beta / b_max)
        * dphi
        * dphi;
    BoundReport {
        name: "lb_annulus_sharp".into(),
        kind: BoundKind::Lower,
        value,
        preconditions: vec![pc("inner and outer curves convex", convex)],
        inputs: vec![
            input("area_F", area_f),
            input("perim_F", perim_f),
            input("diam_F", diam_f),
            input("beta", beta),
            input("B", b_max),
            input("dphi", dphi),
        ],
    }
}

/// Lower bound c(k) sqrt(k) dphi^2 for the tiled family and its fundamental
/// piece, with c(k) = pi^2 / (2^15 sqrt(1 + 1/k^3)).
pub fn lb_fundamental_piece(k: u32, dphi: f64) -> BoundReport {
    let kf = k as f64;
    let c = PI * PI / (32_768.0 * (1.0 + 1.0 / kf.powi(3)).sqrt());
    let value = c * kf.sqrt() * dphi * dphi;
    BoundReport {
        name: "lb_fundamental_piece".into(),
        kind: BoundKind::Lower,
        value,
        preconditions: vec![pc("k >= 2", k >= 2), pc("equal fluxes on all holes", true)],
        inputs: vec![input("k", kf), input("dphi", dphi), input("c", c)],
    }
}

/// Area-only upper bound for the first positive Neumann eigenvalue of the
/// zero-potential problem: pi * lambda2(unit disk) / area.
pub fn sw_upper(area: f64, disk_lambda2: f64) -> BoundReport {
    BoundReport {
        name: "sw_upper".into(),
        kind: BoundKind::Upper,
        value: PI * disk_lambda2 / area,
        preconditions: vec![pc("area > 0", area > 0.0)],
        inputs: vec![input("area", area), input("disk_lambda2", disk_lambda2)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ub_holes_values() {
        assert_eq!(ub_holes(0, 123.0).value, 0.0);
        let b = ub_holes(1, PI);
        assert!((b.value - 544.0).abs() < 1e-12 * 544.0);
        // Tiled family at k = 2: n = 4 holes, area 8 + 4/2^(3/2).
        let area = 8.0 + 4.0 / 2.0f64.powf(1.5);
        let b = ub_holes(4, area);
        let expected = 544.0 * PI * 4.0 / area;
        assert!((b.value - expected).abs() < 1e-12 * expected);
        assert!((expected - 726.147).abs() < 1e-2);
    }

    #[test]
    fn eps_net_bounds() {
        let b = lb_eps_net(0.25, 0.5, EpsNetFlags::all_met());
        assert!((b.value - 0.0625).abs() < 1e-15);
        assert!(b.asserted());
        assert_eq!(lb_eps_net(0.25, 0.0, EpsNetFlags::all_met()).value, 0.0);
        let b = lb_eps_net_count(16, PI, 0.5, EpsNetFlags::all_met());
        assert!((b.value - 1.0 / 64.0).abs() < 1e-15);
        let mut flags = EpsNetFlags::all_met();
        flags.delta_above_eps = false;
        assert!(!lb_eps_net(0.25, 0.5, flags).asserted());
    }

    #[test]
    fn cut_bound_values() {
        let b = ub_cut(1, 4.0, &[0.01]);
        let expected = 2.0 * PI / 0.005f64.ln().abs();
        assert!((b.value - expected).abs() < 1e-12);
        assert!((expected - 1.18596).abs() < 1e-4);
        assert!(b.asserted());

        // Vanishing cut length drives the bound to zero.
        let tiny = ub_cut(1, 4.0, &[1e-300]);
        assert!(tiny.value < 1e-2);

        // Reference cut of the k = 2 tiled family: two lengths 2/2^(5/2),
        // two lengths 1/2^(5/2); both hypotheses hold.
        let area = 8.0 + 4.0 / 2.0f64.powf(1.5);
        let h_long = 2.0 / 2.0f64.powf(2.5);
        let h_short = 1.0 / 2.0f64.powf(2.5);
        let b = ub_cut(4, area, &[h_long, h_long, h_short, h_short]);
        let expected = 8.0 * PI * 4.0 / area
            * (2.0 / (h_long / 2.0).ln().abs() + 2.0 / (h_short / 2.0).ln().abs());
        assert!((b.value - expected).abs() < 1e-12 * expected);
        assert!(b.asserted(), "1.0607 <= 9.414/(2 pi) = 1.498 holds");
    }

    #[test]
    fn cut_aggregate_values() {
        let b = ub_cut_aggregate(1, 1.0, (-4.0f64).exp(), true);
        assert!((b.value - 2.0 * PI).abs() < 1e-12);
        assert!(b.asserted());

        // Required cut total for a unit-area domain to reach bound <= 1.
        for n in 1..=3usize {
            let h = n as f64 * (-8.0 * PI * (n * n) as f64).exp();
            let b = ub_cut_aggregate(n, 1.0, h, true);
            assert!(b.value <= 1.0 + 1e-9, "n={n}: {}", b.value);
        }
    }

    #[test]
    fn jensen_consistency() {
        // Equal segments: the per-segment form never exceeds the aggregate.
        let e2 = (-2.0f64).exp();
        for n in [1usize, 3, 7] {
            for h_each in [e2 * 0.9, 1e-3, 1e-7] {
                let total = h_each * n as f64;
                let per = ub_cut(n, 2.0, &vec![h_each; n]);
                let agg = ub_cut_aggregate(n, 2.0, total, true);
                assert!(per.value <= agg.value * (1.0 + 1e-12));
            }
        }
        // Unequal segments below e^-2 (Jensen through concavity).
        let hs = [1e-2, 1e-3, 5e-5];
        let per = ub_cut(3, 2.0, &hs);
        let agg = ub_cut_aggregate(3, 2.0, hs.iter().sum(), true);
        assert!(per.value <= agg.value * (1.0 + 1e-12));
    }

    #[test]
    fn doubly_connected_values() {
        let area = 0.75 * PI;
        let b = ub_doubly_connected(area, 0.01);
        assert!((b.value - 2.01317).abs() < 1e-4);
        assert!(b.asserted());
        // Annulus gap 0.5 exceeds area/(2 pi) = 0.375: value is computed but
        // the hypothesis flag is unmet, so the bound is advisory only.
        let b = ub_doubly_connected(area, 0.5);
        assert!((b.value - 7.6937).abs() < 1e-3);
        assert!(!b.asserted());
        // h = 2/e^k decay.
        let b1 = ub_doubly_connected(1.0, 2.0 * (-30.0f64).exp());
        assert!((b1.value - 8.0 * PI / 30.0).abs() < 1e-12);
    }

    #[test]
    fn annulus_lower_bounds() {
        // Concentric annulus radii (0.5, 1), half-integer flux.
        let b = lb_annulus(2.0 * PI, 0.5, 0.5, 0.5, true);
        assert!((b.value - 0.25).abs() < 1e-14);
        assert_eq!(lb_annulus(2.0 * PI, 0.5, 0.5, 0.0, true).value, 0.0);
        let shrinking = lb_annulus(2.0 * PI, 1e-9, 0.5, 0.5, true);
        assert!(shrinking.value < 1e-15);

        let b = lb_annulus_sharp(PI, 2.0 * PI, 2.0, 0.5, 0.5, 0.5, true);
        assert!((b.value - PI * PI / 2048.0).abs() < 1e-15);
    }

    #[test]
    fn fundamental_piece_bound() {
        // Recomputed from the formula: pi^2/(2^15 sqrt(1+1/64)) * 2 * 0.25.
        let b = lb_fundamental_piece(4, 0.5);
        let expected = PI * PI / (32_768.0 * (1.0 + 1.0 / 64.0).sqrt()) * 2.0 * 0.25;
        assert!((b.value - expected).abs() < 1e-18);
        assert!((expected - 1.494_352e-4).abs() < 1e-9);
        assert_eq!(lb_fundamental_piece(4, 0.0).value, 0.0);
        // sqrt(k) growth: value(4k)/value(k) tends to 2.
        for k in [4u32, 16, 64, 256] {
            let ratio = lb_fundamental_piece(4 * k, 0.5).value / lb_fundamental_piece(k, 0.5).value;
            assert!((ratio - 2.0).abs() < 4.0 / k as f64);
        }
        // c(k) >= pi^2 / (2^15 sqrt 2) for every k >= 1.
        for k in 1..=50u32 {
            let c = PI * PI / (32_768.0 * (1.0 + 1.0 / (k as f64).powi(3)).sqrt());
            assert!(c >= PI * PI / (32_768.0 * 2.0f64.sqrt()) - 1e-18);
        }
        assert!((PI * PI / (32_768.0 * 2.0f64.sqrt()) - 2.1298e-4).abs() < 1e-7);
    }

    #[test]
    fn sw_upper_scaling() {
        let b = sw_upper(PI, 3.39);
        assert!((b.value - 3.39).abs() < 1e-12);
        let b2 = sw_upper(2.0 * PI, 3.39);
        assert!((b2.value - 3.39 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn bounds_scale_like_inverse_area() {
        // Homogeneity: scaling the domain by t divides every bound by t^2.
        let t: f64 = 2.5;
        let t2 = t * t;
        let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1e-300);
        assert!(rel(ub_holes(3, 5.0 * t2).value, ub_holes(3, 5.0).value / t2) < 1e-12);
        assert!(
            rel(
                lb_eps_net(0.2 * t, 0.5, EpsNetFlags::all_met()).value,
                lb_eps_net(0.2, 0.5, EpsNetFlags::all_met()).value / t2
            ) < 1e-12
        );
        assert!(
            rel(
                lb_annulus(2.0 * PI * t, 0.5 * t, 0.5 * t, 0.5, true).value,
                lb_annulus(2.0 * PI, 0.5, 0.5, 0.5, true).value / t2
            ) < 1e-12
        );
        assert!(
            rel(
                lb_annulus_sharp(PI * t2, 2.0 * PI * t, 2.0 * t, 0.5 * t, 0.5 * t, 0.5, true)
                    .value,
                lb_annulus_sharp(PI, 2.0 * PI, 2.0, 0.5, 0.5, 0.5, true).value / t2
            ) < 1e-12
        );
        assert!(rel(sw_upper(PI * t2, 3.39).value, sw_upper(PI, 3.39).value / t2) < 1e-12);
    }
}
