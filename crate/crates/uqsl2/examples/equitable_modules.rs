//! The equitable presentation: generators x, y^{±1}, z, the nilpotent parts
//! n_x, n_y, n_z, and their twisted commutation relations.
//!
//! In the equitable presentation all three generators play symmetric roles,
//! tied together by (q gh − q^{-1} hg)/(q − q^{-1}) = 1 for (g,h) running
//! cyclically over (x,y), (y,z), (z,x). Each generator g has a nilpotent
//! part: ν_x = q(1 − yz) = q^{-1}(1 − zy) and cyclic shifts, divided by
//! q − q^{-1} to give n_g. On a module of diameter d each n_g is nilpotent
//! of index exactly d + 1. Run with `cargo run --example equitable_modules`.

use uqsl2::expr::{equitable_relations, n_commutation, GenSym};
use uqsl2::module::nilpotent_parts;
use uqsl2::{BasisKind, IdentKind, QContext, Rat, Realization, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;
    let d = 3;
    let real = Realization::irreducible(&ctx, d, BasisKind::Equitable)?;
    println!("q = {}, d = {d}, dim = {}", ctx.q(), real.dim());

    println!("x = {:?}", real.matrix(GenSym::X)?);
    println!("y = {:?}", real.matrix(GenSym::Y)?);
    println!("z = {:?}", real.matrix(GenSym::Z)?);

    for (name, relation) in equitable_relations(&ctx) {
        let residual = real.eval(&relation)?;
        println!("{name}: residual is zero = {}", residual.is_zero());
        assert!(residual.is_zero());
    }

    // The nilpotent parts are computed from both defining forms of each
    // ν-element; the constructor cross-checks that the forms agree.
    let parts = nilpotent_parts(real.table(), real.dim(), &ctx)?;
    println!("n_x = {:?}", parts.n_x);
    println!("n_y = {:?}", parts.n_y);
    println!("n_z = {:?}", parts.n_z);

    // Nilpotency of index exactly d + 1: the d-th power is nonzero, the
    // (d+1)-st vanishes.
    for (name, n) in [("n_x", &parts.n_x), ("n_y", &parts.n_y), ("n_z", &parts.n_z)] {
        let index = n.nilpotency_index()?;
        println!("{name}: nilpotency index = {index}");
        assert_eq!(index, d + 1);
    }

    // Twisted commutation: x n_y = q^2 n_y x, x n_z = q^{-2} n_z x, and the
    // four cyclic partners.
    for (name, relation) in n_commutation(&ctx) {
        let residual = real.eval(&relation)?;
        println!("{name}: residual is zero = {}", residual.is_zero());
        assert!(residual.is_zero());
    }

    // y^{-1} recovers x and z from the nilpotent parts:
    //   x = y^{-1} - q^{-1} ν_z y^{-1},   z = y^{-1} - q^{-1} y^{-1} ν_x.
    for (name, relation) in uqsl2::expr::generator_recovery(&ctx) {
        let residual = real.eval(&relation)?;
        println!("{name}: residual is zero = {}", residual.is_zero());
        assert!(residual.is_zero());
    }

    println!("all checks passed");
    Ok(())
}
