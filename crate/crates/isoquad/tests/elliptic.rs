//! Complex-argument Jacobi functions against frozen high-precision values,
//! plus the structural identities the library promises.

use isoquad::elliptic::{complete_k, jacobi_real, EllipticModulus};
use num_complex::Complex64;
use proptest::prelude::*;

/// `(m, u, v, sn, cn, dn)`, complex values as `[re, im]`.
type Row = (f64, f64, f64, [f64; 2], [f64; 2], [f64; 2]);

/// Computed with mpmath at 30 digits.
#[rustfmt::skip]
const FROZEN: &[Row] = &[
    (0.36, 0.3, 0.2, [0.3017391665380572, 0.18964449973301392], [0.973843552363207, -0.058760129539394794], [0.9902542262078432, -0.020803084539771644]),
    (0.36, 1.1, -0.7, [1.0401917454730885, -0.294061646436066], [0.5550904134839832, 0.5510462617489387], [0.8123935205837809, 0.1355463531303874]),
    (0.36, -2.3, 0.45, [-0.9727854595440907, -0.16100901516795008], [-0.44879009731917013, 0.348998852128205], [0.8205985169906654, -0.06871302007552116]),
    (0.36, 0.8, 1.9, [2.357169861053851, 0.2081753615545371], [0.22965123338682925, -2.136738744371516], [0.17531048838335075, -1.007661830928425]),
    (-0.5, 0.3, 0.2, [0.3010332489751159, 0.1961037890371525], [0.9754477472830856, -0.06051965460437165], [1.013375823098892, 0.02912727904325769]),
    (-0.5, 1.1, -0.7, [1.265670943781665, -0.4147064142493514], [0.5934872203202691, 0.8844029673158584], [1.3244746404513, -0.19814719085011662]),
    (-0.5, -2.3, 0.45, [-0.5533525769842097, -0.42815160586268436], [-0.9679969352723151, 0.24475159560024276], [1.0365820242529833, 0.11427884571642095]),
    (-0.5, 0.8, 1.9, [-0.7357160470032027, 2.068504954712695], [2.2768780856766675, 0.6683854959390538], [-0.6646833042932768, 1.1447799866929471]),
    (1.69, 0.3, 0.2, [0.30272399364686975, 0.17973130760407233], [0.9714927418823183, -0.05600554371189489], [0.9534250016213851, -0.09644300781665038]),
    (1.69, 1.1, -0.7, [0.8744423533089041, -0.1180104057724776], [0.5352121394003954, 0.19280821442920312], [0.29290174136317904, 0.5954101570534334]),
    (1.69, -2.3, 0.45, [-0.6658600730229297, -0.24183735689281613], [0.8091484675230799, -0.19901148748789999], [-0.7058336442355407, 0.385558880659606]),
    (1.69, 0.8, 1.9, [0.9445380461458303, -0.27773440977455877], [-0.6088109153710425, -0.4308902980099305], [-0.5414184561480055, -0.8188470605005065]),
];

fn c(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

#[test]
fn matches_frozen_values_in_all_three_cases() {
    for &(m, u, v, sn, cn, dn) in FROZEN {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        let (s, cc, d) = modulus.sncndn(Complex64::new(u, v)).unwrap();
        for (got, want) in [(s, sn), (cc, cn), (d, dn)] {
            let err = (got - c(want)).norm() / c(want).norm().max(1.0);
            assert!(err < 1e-13, "m={m} z={u}+{v}i: {got} vs {want:?}");
        }
    }
}

/// Adaptive Simpson quadrature, independent of the AGM.
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    rec(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 40)
}

#[test]
fn complete_k_against_quadrature() {
    for p in [0.0, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.95] {
        let f = move |t: f64| 1.0 / (1.0 - p * p * t.sin().powi(2)).sqrt();
        let oracle = adaptive_simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-15);
        let k = complete_k(p).unwrap();
        assert!((k - oracle).abs() < 1e-13 * oracle, "p={p}: {k} vs {oracle}");
    }
    assert!((complete_k(0.5).unwrap() - 1.685750354812596).abs() < 1e-14);
}

#[test]
fn quarter_period_of_case_two_zeroes_cn() {
    let m = EllipticModulus::imaginary(0.8).unwrap();
    let k = m.real_quarter_period().unwrap();
    let j = m.jacobi(k).unwrap();
    assert!(j.cn.abs() < 1e-14 && (j.sn - 1.0).abs() < 1e-14);
}

#[test]
fn real_amplitude_is_monotone_in_case_two() {
    let m = EllipticModulus::from_parameter(-0.7).unwrap();
    let mut prev = m.jacobi(-6.0).unwrap().am;
    for k in 1..600 {
        let am = m.jacobi(-6.0 + k as f64 * 0.02).unwrap().am;
        assert!(am > prev);
        prev = am;
    }
}

fn moduli() -> impl Strategy<Value = f64> {
    prop_oneof![0.05f64..0.95, -2.0f64..-0.05, 1.05f64..3.0]
}

proptest! {
    #[test]
    fn pythagorean_laws_complex(m in moduli(), u in -3.0f64..3.0, v in -1.0f64..1.0) {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        if let Ok(j) = modulus.jacobi_complex(Complex64::new(u, v)) {
            let scale = 1.0 + j.sn.norm_sqr() * m.abs().max(1.0);
            prop_assume!(scale < 1e4);
            prop_assert!((j.sn * j.sn + j.cn * j.cn - 1.0).norm() <= 1e-11 * scale);
            prop_assert!((j.dn * j.dn + m * j.sn * j.sn - 1.0).norm() <= 1e-11 * scale);
        }
    }

    #[test]
    fn amplitude_exponential(m in moduli(), u in -3.0f64..3.0, v in -0.8f64..0.8) {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        if let Ok(j) = modulus.jacobi_complex(Complex64::new(u, v)) {
            prop_assume!(j.sn.norm() < 1e3);
            let lhs = (Complex64::i() * j.am).exp();
            let rhs = j.cn + Complex64::i() * j.sn;
            prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn amplitude_sum_formula(p in 0.05f64..0.95, u in -4.0f64..4.0, v in -1.2f64..1.2) {
        let m = EllipticModulus::real(p).unwrap();
        let q = m.q().re;
        if let Ok(j) = m.jacobi_complex(Complex64::new(u, v)) {
            let a = jacobi_real(u, p);
            let b = jacobi_real(v, q);
            let want = Complex64::new(a.cn * b.cn, a.sn * b.dn) / (1.0 + a.dn * b.sn);
            prop_assert!(((Complex64::i() * j.am).exp() - want).norm() < 1e-12 * want.norm().max(1.0));
        }
    }

    #[test]
    fn double_periodicity(m in moduli(), u in -1.5f64..1.5, v in -0.5f64..0.5) {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        let (w1, w2) = modulus.period_lattice().unwrap();
        let z = Complex64::new(u, v);
        if let Ok(base) = modulus.sncndn(z) {
            prop_assume!(base.0.norm() < 1e3);
            for w in [w1, w2] {
                let s = modulus.sncndn(z + w).unwrap();
                let scale = 1.0 + base.0.norm().max(base.1.norm()).max(base.2.norm());
                prop_assert!((s.0 - base.0).norm() <= 1e-10 * scale);
                prop_assert!((s.1 - base.1).norm() <= 1e-10 * scale);
                prop_assert!((s.2 - base.2).norm() <= 1e-10 * scale);
            }
        }
    }

    #[test]
    fn conversions_preserve_reality(m in moduli(), u in -5.0f64..5.0) {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        let r = modulus.jacobi(u).unwrap();
        let c = modulus.jacobi_complex(Complex64::new(u, 0.0)).unwrap();
        prop_assert!((c.sn - r.sn).norm() < 1e-13);
        prop_assert!((c.cn - r.cn).norm() < 1e-13);
        prop_assert!((c.dn - r.dn).norm() < 1e-13);
        prop_assert!(c.sn.im == 0.0 && c.cn.im == 0.0 && c.dn.im == 0.0);
    }

    #[test]
    fn real_derivatives_by_central_differences(m in moduli(), u in -4.0f64..4.0) {
        let modulus = EllipticModulus::from_parameter(m).unwrap();
        let h = 1e-4;
        let f = |t: f64| modulus.jacobi(t).unwrap();
        let d = |g: fn(&isoquad::elliptic::JacobiQuadruple<f64>) -> f64| {
            (-g(&f(u + 2.0 * h)) + 8.0 * g(&f(u + h)) - 8.0 * g(&f(u - h)) + g(&f(u - 2.0 * h))) / (12.0 * h)
        };
        let j = f(u);
        let scale = 1.0 + m.abs();
        prop_assert!((d(|j| j.sn) - j.cn * j.dn).abs() < 1e-6 * scale);
        prop_assert!((d(|j| j.cn) + j.sn * j.dn).abs() < 1e-6 * scale);
        prop_assert!((d(|j| j.dn) + m * j.sn * j.cn).abs() < 1e-6 * scale);
        prop_assert!((d(|j| j.am) - j.dn).abs() < 1e-6 * scale);
    }
}
