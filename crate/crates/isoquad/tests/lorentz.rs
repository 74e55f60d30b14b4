//! Lorentz numbers, their analytic extension, and the Lorentz-Jacobi
//! functions built on it.

use isoquad::elliptic::{complete_k, EllipticModulus};
use isoquad::lelliptic::{hypihyp_residual, l_jacobi, y_hyp1};
use isoquad::paracomplex::{l_extend, para_derivative, Interval, Lorentz};
use isoquad::Error;
use proptest::prelude::*;

fn lorentz(range: f64) -> impl Strategy<Value = Lorentz> {
    (-range..range, -range..range).prop_map(|(a, b)| Lorentz::new(a, b))
}

fn close(a: Lorentz, b: Lorentz, tol: f64) -> bool {
    let scale = 1.0 + a.re.abs().max(a.im.abs()).max(b.re.abs()).max(b.im.abs());
    (a.re - b.re).abs() <= tol * scale && (a.im - b.im).abs() <= tol * scale
}

#[test]
fn idempotents_annihilate_each_other() {
    let e_plus = Lorentz::new(0.5, 0.5);
    let e_minus = Lorentz::new(0.5, -0.5);
    assert_eq!(e_plus * e_plus, e_plus);
    assert_eq!(e_minus * e_minus, e_minus);
    assert_eq!(e_plus * e_minus, Lorentz::ZERO);
    assert_eq!(Lorentz::new(1.0, 1.0) * Lorentz::new(1.0, -1.0), Lorentz::ZERO);
}

#[test]
fn light_cone_divisors_are_refused() {
    let err = Lorentz::new(2.0, 1.0).checked_div(Lorentz::new(-3.0, 3.0));
    assert!(matches!(err, Err(Error::NullDivisor(_))));
    assert_eq!(Lorentz::ONE.checked_div(Lorentz::J).unwrap(), Lorentz::J);
}

#[test]
fn exp_extends_to_hyperbolic_rotation() {
    for (u, v) in [(0.0, 0.0), (0.3, -1.2), (-2.0, 0.7), (1.5, 1.5)] {
        let e = l_extend(f64::exp, Interval::REAL_LINE, Lorentz::new(u, v)).unwrap();
        let want = Lorentz::new(u.exp() * v.cosh(), u.exp() * v.sinh());
        assert!(close(e, want, 1e-15), "{e} vs {want}");
    }
}

#[test]
fn extension_refuses_to_leave_the_domain() {
    let sqrt = |t: f64| t.sqrt();
    let domain = Interval::new(0.0, f64::INFINITY);
    assert!(l_extend(sqrt, domain, Lorentz::new(1.0, 0.5)).is_ok());
    assert!(matches!(l_extend(sqrt, domain, Lorentz::new(1.0, 1.5)), Err(Error::Domain(_))));
}

#[test]
fn diagonal_argument_kills_one_component() {
    let m = EllipticModulus::real(0.8).unwrap();
    for u in [0.2, 0.9, -1.4] {
        let j = l_jacobi(Lorentz::new(u, u), &m).unwrap();
        let s = m.jacobi(2.0 * u).unwrap().sn;
        assert!(close(j.sn, Lorentz::new(0.5 * s, 0.5 * s), 1e-15));
    }
}

#[test]
fn y_hyp1_on_the_real_line() {
    let q = EllipticModulus::real(0.7).unwrap();
    assert_eq!(y_hyp1(Lorentz::ZERO, &q).unwrap(), Lorentz::ONE);
    for u in [-1.1, 0.3, 1.6] {
        let j = q.jacobi(u).unwrap();
        let y = y_hyp1(Lorentz::real(u), &q).unwrap();
        assert!((y.re - j.cn / (1.0 + j.sn)).abs() < 1e-14);
        assert!((y.re - (1.0 - j.sn) / j.cn).abs() < 1e-13);
        assert_eq!(y.im, 0.0);
    }
}

#[test]
fn y_hyp1_pole_is_reported() {
    // u = −K makes sn_q u = −1 and cn_q u = 0, so at v = 0 the denominator
    // 1 + sn_q u vanishes.
    let q = EllipticModulus::real(0.7).unwrap();
    let k = complete_k(0.7).unwrap();
    assert!(matches!(y_hyp1(Lorentz::real(-k), &q), Err(Error::Pole(_))));
}

proptest! {
    #[test]
    fn ring_axioms(a in lorentz(3.0), b in lorentz(3.0), c in lorentz(3.0)) {
        prop_assert!(close((a * b) * c, a * (b * c), 1e-14));
        prop_assert!(close(a * (b + c), a * b + a * c, 1e-14));
        prop_assert_eq!(a * b, b * a);
    }

    #[test]
    fn conjugate_product_is_the_modulus(a in lorentz(5.0)) {
        let (bar, m) = a.conj_and_modulus();
        let prod = a * bar;
        prop_assert!(prod.im.abs() <= 1e-14 * (a.re * a.re + a.im * a.im).max(1.0));
        prop_assert!((prod.re - m).abs() <= 1e-14 * (a.re * a.re + a.im * a.im).max(1.0));
    }

    #[test]
    fn idempotent_decomposition_reassembles(a in lorentz(10.0)) {
        let (plus, minus) = a.idempotent();
        let back = Lorentz::new(0.5, 0.5).scale(plus) + Lorentz::new(0.5, -0.5).scale(minus);
        prop_assert!(close(back, a, 1e-15));
    }

    #[test]
    fn division_inverts_multiplication(a in lorentz(3.0), b in lorentz(3.0)) {
        prop_assume!(b.norm_sqr().abs() > 1e-3);
        let r = a.checked_div(b).unwrap();
        prop_assert!(close(r * b, a, 1e-12));
    }

    #[test]
    fn extension_is_a_homomorphism(z in lorentz(1.0)) {
        let line = Interval::REAL_LINE;
        let f = |t: f64| t.sin();
        let g = |t: f64| 1.0 + t * t;
        let fg = l_extend(|t| f(t) * g(t), line, z).unwrap();
        prop_assert!(close(fg, l_extend(f, line, z).unwrap() * l_extend(g, line, z).unwrap(), 1e-12));
        let fog = l_extend(|t| f(g(t)), line, z).unwrap();
        let inner = l_extend(g, line, z).unwrap();
        prop_assert!(close(fog, l_extend(f, line, inner).unwrap(), 1e-12));
    }

    #[test]
    fn derivative_commutes_with_extension(z in lorentz(1.5)) {
        let line = Interval::REAL_LINE;
        let f = |t: f64| (0.5 * t).cos() * t.exp();
        let df = |t: f64| t.exp() * ((0.5 * t).cos() - 0.5 * (0.5 * t).sin());
        let d = para_derivative(|w| l_extend(f, line, w), z, 1e-5).unwrap();
        prop_assert!(close(d, l_extend(df, line, z).unwrap(), 1e-6));
    }

    #[test]
    fn lorentz_jacobi_pythagorean_laws(u in -2.0f64..2.0, v in -2.0f64..2.0, p in 0.05f64..0.99) {
        let m = EllipticModulus::real(p).unwrap();
        let k = complete_k(p).unwrap();
        let z = Lorentz::new(u * k, v * k);
        let j = l_jacobi(z, &m).unwrap();
        prop_assert!(close(j.sn * j.sn + j.cn * j.cn, Lorentz::ONE, 1e-11));
        prop_assert!(close(j.dn * j.dn + (j.sn * j.sn).scale(p * p), Lorentz::ONE, 1e-11));
    }

    #[test]
    fn lorentz_jacobi_lattice_period(u in -1.0f64..1.0, v in -1.0f64..1.0, p in 0.05f64..0.95) {
        let m = EllipticModulus::real(p).unwrap();
        let k = complete_k(p).unwrap();
        let z = Lorentz::new(u, v);
        let a = l_jacobi(z, &m).unwrap();
        let b = l_jacobi(z + Lorentz::new(2.0 * k, 2.0 * k), &m).unwrap();
        prop_assert!(close(a.sn, b.sn, 1e-12) && close(a.cn, b.cn, 1e-12) && close(a.dn, b.dn, 1e-12));
    }

    #[test]
    fn y_hyp1_symmetry_family_solves_the_ode(u in 0.1f64..1.2, v in -0.8f64..0.8, q in 0.3f64..0.9) {
        let m = EllipticModulus::real(q).unwrap();
        let z = Lorentz::new(u, v);
        let flips = [Lorentz::ONE, -Lorentz::ONE, Lorentz::J, -Lorentz::J];
        for s in flips {
            let f = |w| Ok(s * y_hyp1(w, &m)?);
            let (Ok(y), Ok(dy)) = (f(z), para_derivative(f, z, 1e-5)) else { continue };
            let r = hypihyp_residual(y, dy, &m);
            let scale = 1.0 + (y * y).norm_sqr().abs();
            prop_assert!(r.re.abs().max(r.im.abs()) <= 1e-6 * scale, "residual {r} for s = {s}");
        }
    }
}
