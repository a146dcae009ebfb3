//! The factorization theorem: a reflection operator as a q-exponential
//! times a half-integer diagonal twist.
//!
//! On a type-1 module define Υ as the diagonal operator acting on the weight-λ
//! space by q^{-λ²/2}, and the rotation-like operator 𝔯 = exp_q(n_x) · Υ ·
//! exp_q(n_z). On the irreducible of diameter d the operator 𝔯 equals
//! q^{-d²/2} Ω — a rotator in disguise. The theorem states
//!
//! ```text
//!   exp_q(n_z) · 𝔯  =  a reflection operator,
//! ```
//!
//! where which of T⁻¹, (T^∨)⁻¹ appears depends on the square-root convention
//! for q and on the identification kind. Run with
//! `cargo run --example main_theorem`.

use uqsl2::expr::GenSym;
use uqsl2::lusztig::{lusztig_operator, partner_inverse_kind};
use uqsl2::qexp::exp_q_symbol;
use uqsl2::rotator::{frak_r, standard_rotator, upsilon};
use uqsl2::{BasisKind, IdentKind, QContext, Rat, Realization, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let d = 2;
    let cells: [(ThetaMode, Rat); 2] = [
        (ThetaMode::SqQ, Rat::int(-2)),    // theta^2 = q = 4
        (ThetaMode::SqQInv, Rat::frac(1, 2)), // theta^2 = 1/q
    ];
    for (mode, theta) in cells {
        for ident in [IdentKind::Primary, IdentKind::Secondary] {
            let ctx = QContext::new(Rat::int(4), theta.clone(), mode, 0, ident)?;
            let real = Realization::irreducible(&ctx, d, BasisKind::Chevalley)?;

            // Υ is diagonal per weight space with entries q^{-λ²/2}; the
            // half powers use the θ convention of the context.
            let ups = upsilon(&real, &ctx)?;
            println!(
                "mode = {}, ident = {}: Upsilon = {:?}",
                mode.name(),
                ident.name(),
                ups
            );

            // 𝔯 = exp_q(n_x) Υ exp_q(n_z) is a scaled rotator.
            let r = frak_r(&real, &ctx)?;
            let omega = standard_rotator(&real, &ctx)?;
            let d_sq = (d * d) as i64;
            let scale = match mode {
                // q^{d²/2} = (-1)^d θ^{d²} when θ² = q, and θ^{-d²} when
                // θ² = q^{-1}.
                ThetaMode::SqQ => {
                    let s = ctx.theta_pow(d_sq);
                    if d % 2 == 0 { s } else { -s }
                }
                ThetaMode::SqQInv => ctx.theta_pow(-d_sq),
            };
            assert_eq!(r.scale(&scale), omega);
            println!("  q^(d^2/2) frak_r = Omega: verified");

            // The factorization: exp_q(n_z) · 𝔯 equals the partner
            // reflection operator selected by (mode, ident).
            let partner = partner_inverse_kind(&ctx);
            let left = &exp_q_symbol(&real, GenSym::Nz, &ctx)? * &r;
            let right = lusztig_operator(&real, &ctx, partner)?;
            assert_eq!(left, right);
            println!("  exp_q(n_z) frak_r = {}: verified", partner.name());
        }
    }
    println!("all checks passed");
    Ok(())
}
