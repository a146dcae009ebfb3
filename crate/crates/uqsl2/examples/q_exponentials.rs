//! q-exponentials of the nilpotent parts and their conjugation identities.
//!
//! For a nilpotent φ the q-exponential is the finite sum
//!
//! ```text
//!   exp_q(φ) = Σ_i  q^{C(i,2)} / [i]_q!  ·  φ^i
//! ```
//!
//! Its inverse is exp_{q^{-1}}(−φ). Conjugating the equitable generators by
//! E = exp_q(n_z) permutes and mixes them in closed form — for instance
//! E^{-1} y E = x^{-1} and E^{-1} x E = x y x. Run with
//! `cargo run --example q_exponentials`.

use uqsl2::expr::GenSym;
use uqsl2::qexp::{exp_q, exp_q_inverse, exp_q_symbol};
use uqsl2::{BasisKind, IdentKind, Matrix, QContext, Rat, Realization, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;
    let d = 3;
    let real = Realization::irreducible(&ctx, d, BasisKind::Equitable)?;
    let dim = real.dim();
    println!("q = {}, d = {d}", ctx.q());

    let e_z = exp_q_symbol(&real, GenSym::Nz, &ctx)?;
    println!("exp_q(n_z) = {:?}", e_z);

    // The companion sum Σ_i (-1)^i q^{-C(i,2)} n_z^i / [i]_q! — which is
    // exp_{q^{-1}} evaluated at -n_z — inverts exp_q(n_z).
    let nz = real.matrix(GenSym::Nz)?;
    let inv = exp_q_inverse(nz, &ctx)?;
    assert_eq!(&e_z * &inv, Matrix::identity(dim));
    println!("exp_q(n_z) · exp_(q^-1)(-n_z) = identity: verified");

    // The shift law exp_q(q^2 φ)(1 - (q^2 - 1)φ) = exp_q(φ).
    let shifted = exp_q(&nz.scale(&ctx.q_pow(2)), &ctx)?;
    let factor = &Matrix::identity(dim) - &nz.scale(&(ctx.q_pow(2) - Rat::one()));
    assert_eq!(&shifted * &factor, e_z);
    println!("shift law: verified");

    // Conjugation: E^{-1} y E = x^{-1} and E^{-1} x E = x y x.
    let e_z_inv = e_z.inverse()?;
    let x = real.matrix(GenSym::X)?;
    let y = real.matrix(GenSym::Y)?;
    let conj = |m: &Matrix| &(&e_z_inv * m) * &e_z;
    assert_eq!(conj(y), x.inverse()?);
    println!("E^-1 y E = x^-1: verified");
    assert_eq!(conj(x), &(x * y) * x);
    println!("E^-1 x E = x y x: verified");

    // The full identity battery: inverse and shift laws for all three
    // nilpotent parts, seven conjugation identities, and the bracket
    // recurrence for z against powers of n_z.
    let checks = uqsl2::qexp::all_checks(&real, &ctx);
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!("{} q-exponential checks, {} failed", checks.len(), failed);
    for check in checks.iter().take(8) {
        println!("  {}: pass = {}", check.identity, check.pass);
    }
    assert_eq!(failed, 0);
    println!("all checks passed");
    Ok(())
}
