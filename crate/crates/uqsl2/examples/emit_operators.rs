//! Serializes named operators as exact-rational JSON, the same payloads the
//! `uqsl2 emit` command produces.
//!
//! Generator-level operators (e, f, k, x, y, z, n_x, n_y, n_z, Λ) exist on
//! the module of either sign; weight-space operators (caps, Ω, Υ, 𝔯, the τ
//! maps, and the reflection operators) need the type-1 module. The standard
//! polynomial G is emitted as a coefficient vector rather than a matrix.
//! Run with `cargo run --example emit_operators`.

use uqsl2::module::BasisKind;
use uqsl2::scalar::{IdentKind, QContext, Rat, ThetaMode};
use uqsl2::{emit_operator, Error};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;

    // A generator on the equitable basis.
    let nz = emit_operator("nz", 2, 1, BasisKind::Equitable, &ctx)?;
    println!("nz:\n{}\n", serde_json::to_string_pretty(&nz)?);

    // A weight-level operator on the Chevalley basis.
    let t = emit_operator("T", 1, 1, BasisKind::Chevalley, &ctx)?;
    println!("T:\n{}\n", serde_json::to_string_pretty(&t)?);

    // The standard polynomial comes out as coefficients, lowest degree first.
    let g = emit_operator("G", 3, 1, BasisKind::Equitable, &ctx)?;
    println!("G:\n{}\n", serde_json::to_string_pretty(&g)?);

    // Generator-level names accept epsilon = -1 as well.
    let k = emit_operator("k", 2, -1, BasisKind::Chevalley, &ctx)?;
    println!("k at epsilon = -1:\n{}\n", serde_json::to_string_pretty(&k)?);

    // Weight-level names refuse epsilon = -1 ...
    match emit_operator("Omega", 2, -1, BasisKind::Equitable, &ctx) {
        Err(Error::NotTypeOne(msg)) => println!("Omega at epsilon = -1: rejected ({msg})"),
        other => panic!("expected a type-1 rejection, got {other:?}"),
    }

    // ... and unknown names are flagged as such.
    match emit_operator("frobenius", 2, 1, BasisKind::Equitable, &ctx) {
        Err(Error::UnknownOperator(name)) => println!("unknown operator rejected: {name}"),
        other => panic!("expected an unknown-operator error, got {other:?}"),
    }
    Ok(())
}
