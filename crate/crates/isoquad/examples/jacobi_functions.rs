//! Jacobi elliptic functions for the three kinds of modulus the quadrics
//! need: real in (0, 1), real above 1, and purely imaginary.

use isoquad::elliptic::{complete_k, jacobi_real, modulus_convert, ConversionKind, EllipticModulus};
use num_complex::Complex64;

fn main() -> isoquad::Result<()> {
    let p = 0.8;
    let k = complete_k(p)?;
    let j = jacobi_real(k, p);
    println!("p = {p}: K = {k:.15}");
    println!("  at u = K: sn = {:.3e}, cn = {:.3e}, dn = {:.15}, am = {:.15}", j.sn, j.cn, j.dn, j.am);

    let m = EllipticModulus::real(p)?;
    let (w1, w2) = m.period_lattice()?;
    let z = Complex64::new(0.4, 0.9);
    let (s, c, d) = m.sncndn(z)?;
    let (s2, _, _) = m.sncndn(z + w2)?;
    println!("  periods {w1:.6} and {w2:.6}");
    println!("  sn({z}) = {s:.12}, after one period {s2:.12}");
    println!("  sn² + cn² − 1 = {:.1e}", (s * s + c * c - 1.0).norm());
    println!("  dn² + p²sn² − 1 = {:.1e}", (d * d + p * p * s * s - 1.0).norm());

    for (name, modulus) in [("p = 1.3", Complex64::new(1.3, 0.0)), ("p = 0.6i", Complex64::new(0.0, 0.6))] {
        let kind = if modulus.im == 0.0 { ConversionKind::Reciprocal } else { ConversionKind::Imaginary };
        let (z2, target, record) = modulus_convert(kind, z, modulus)?;
        let converted = EllipticModulus::real(target)?.sncndn(z2)?;
        let (s, c, d) = record.apply(converted.0, converted.1, converted.2)?;
        let direct = EllipticModulus::from_complex(modulus)?.sncndn(z)?;
        println!(
            "{name}: via p' = {target:.6}, sn = {s:.12}, direct sn = {:.12}, |Δ| = {:.1e}",
            direct.0,
            (s - direct.0).norm().max((c - direct.1).norm()).max((d - direct.2).norm())
        );
    }
    Ok(())
}
