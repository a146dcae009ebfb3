//! Cap operators, the standard rotator Ω, its nine product forms, and the
//! τ maps.
//!
//! The standard polynomial G_d interpolates G(q^{d-2i}) = q^{2i(d-i)}; the
//! caps are X = G(x), Y = G(y), Z = G(z). The rotator
//!
//! ```text
//!   Ω = exp_q(n_x) · Y · exp_q(n_z)
//! ```
//!
//! cyclically permutes the equitable generators under conjugation,
//! x → y → z → x, admits eight alternative product factorizations, and cubes
//! to the scalar (−1)^d q^{d(d−1)}. The τ maps are the three square roots of
//! rotation: τ_g = e_g' Ω with Ω = τ_x τ_y τ_z up to the cyclic convention.
//! Run with `cargo run --example rotators`.

use uqsl2::expr::GenSym;
use uqsl2::rotator::{
    cap_operators, rotator_product_forms, standard_polynomial, standard_rotator, tau_maps,
};
use uqsl2::{BasisKind, IdentKind, QContext, Rat, Realization, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;
    let d = 3;
    let real = Realization::irreducible(&ctx, d, BasisKind::Equitable)?;
    println!("q = {}, d = {d}", ctx.q());

    // The standard polynomial and the caps.
    let g = standard_polynomial(d, &ctx)?;
    println!(
        "G has degree {} with coefficients {:?}",
        g.degree().unwrap(),
        g.coeffs().iter().map(Rat::to_string).collect::<Vec<_>>(),
    );
    let caps = cap_operators(&real, &ctx)?;
    println!("Y = G(y) = {:?}", caps.y_cap);

    // Ω and its conjugation action: x → y → z → x.
    let omega = standard_rotator(&real, &ctx)?;
    let omega_inv = omega.inverse()?;
    println!("Omega = {:?}", omega);
    let conj = |m| &(&omega_inv * m) * &omega;
    assert_eq!(conj(real.matrix(GenSym::X)?), *real.matrix(GenSym::Y)?);
    assert_eq!(conj(real.matrix(GenSym::Y)?), *real.matrix(GenSym::Z)?);
    assert_eq!(conj(real.matrix(GenSym::Z)?), *real.matrix(GenSym::X)?);
    println!("Omega^-1 (x, y, z) Omega = (y, z, x): verified");

    // All nine product forms agree.
    let forms = rotator_product_forms(&real, &ctx)?;
    println!("{} product forms computed", forms.len());
    for (i, form) in forms.iter().enumerate() {
        assert_eq!(*form, omega, "product form {i}");
    }
    println!("all product forms equal Omega: verified");

    // Ω³ is a scalar.
    let cube = omega.pow(3);
    let scalar = cube.as_scalar_multiple_of_identity().expect("cube is scalar");
    let expected = if d % 2 == 0 { ctx.q_pow((d * (d - 1)) as i64) } else { -ctx.q_pow((d * (d - 1)) as i64) };
    println!("Omega^3 = {scalar} · I (expected {expected})");
    assert_eq!(scalar, expected);

    // τ maps: τ_y rotates "half-way"; its square recovers Ω² over the caps,
    // via Y = Ω³ τ_y^{-2}.
    let taus = tau_maps(&real, &ctx)?;
    let tau_y_inv = taus.tau_y.inverse()?;
    let recovered = &cube * &(&tau_y_inv * &tau_y_inv);
    assert_eq!(recovered, caps.y_cap);
    println!("Y = Omega^3 tau_y^-2: verified");

    // The full battery across this module.
    let checks = uqsl2::rotator::all_checks(&real, &ctx);
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!("{} rotator checks, {} failed", checks.len(), failed);
    assert_eq!(failed, 0);
    println!("all checks passed");
    Ok(())
}
