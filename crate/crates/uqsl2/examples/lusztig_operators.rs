//! The four reflection operators T, T^∨, T⁻¹, (T^∨)⁻¹: triple-sum
//! definitions, closed forms on the weight basis, and the algebra
//! automorphisms they realize by conjugation.
//!
//! Each operator is a finite sum over words e^a f^b e^c (or f^a e^b f^c)
//! weighted by signed q-powers over q-factorials, restricted per weight
//! space. On the irreducible module of diameter d they act on the weight
//! basis by an antidiagonal with explicit signed q-power coefficients, e.g.
//!
//! ```text
//!   T v_i = (-1)^{d-i} q^{(d-i)(i+1)} v_{d-i}.
//! ```
//!
//! Conjugation by T realizes the automorphism e ↦ −fk, f ↦ −k⁻¹e, k ↦ k⁻¹;
//! conjugation by T^∨ realizes e ↦ −kf, f ↦ −ek⁻¹, k ↦ k⁻¹. Run with
//! `cargo run --example lusztig_operators`.

use uqsl2::lusztig::{
    closed_form_operators, lusztig_operator, random_words, AutName, AutomorphismTable,
    LusztigKind,
};
use uqsl2::{BasisKind, IdentKind, Matrix, QContext, Rat, Realization, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;
    let d = 3;
    let real = Realization::irreducible(&ctx, d, BasisKind::Chevalley)?;
    println!("q = {}, d = {d}", ctx.q());

    // Triple sums match the closed forms on the weight basis.
    let (t_closed, tvee_closed, tinv_closed, tveeinv_closed) = closed_form_operators(d, &ctx);
    for (kind, closed) in [
        (LusztigKind::T, &t_closed),
        (LusztigKind::TVee, &tvee_closed),
        (LusztigKind::TInv, &tinv_closed),
        (LusztigKind::TVeeInv, &tveeinv_closed),
    ] {
        let op = lusztig_operator(&real, &ctx, kind)?;
        assert_eq!(op, *closed, "{}", kind.name());
        println!("{}: triple sum equals closed form", kind.name());
    }
    println!("T = {:?}", t_closed);

    // T^{-1} really inverts T, and likewise for the other pair.
    let t = lusztig_operator(&real, &ctx, LusztigKind::T)?;
    let t_inv = lusztig_operator(&real, &ctx, LusztigKind::TInv)?;
    assert_eq!(&t * &t_inv, Matrix::identity(real.dim()));
    println!("T · T^-1 = identity: verified");

    // Per weight space, T = (-1)^λ q^λ T^∨.
    let tvee = lusztig_operator(&real, &ctx, LusztigKind::TVee)?;
    for lambda in real.weights().lambdas() {
        let sign = if lambda.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        let scale = &sign * &ctx.q_pow(lambda);
        let indices = real.weights().indices(lambda).to_vec();
        let left = t.restrict_columns(&indices);
        let right = tvee.restrict_columns(&indices).scale(&scale);
        assert_eq!(left, right);
        println!("on the weight-{lambda} space: T = (-1)^{lambda} q^{lambda} T^vee");
    }

    // Conjugation realizes the automorphism tables, here spot-checked on the
    // generators and on seeded random words in e, f, k^{±1}, x, y^{±1}, z.
    for (aut, kind) in [(AutName::L, LusztigKind::T), (AutName::LVee, LusztigKind::TVee)] {
        let table = AutomorphismTable::new(aut);
        let images = table.alphabet_images(&ctx)?;
        let op = match kind {
            LusztigKind::T => &t,
            _ => &tvee,
        };
        for word in random_words(7, 8) {
            let expr = uqsl2::AlgebraExpression::word(&word);
            let image = expr.substitute(&images)?;
            let left = &real.eval(&image)? * op;
            let right = op * &real.eval(&expr)?;
            assert_eq!(left, right);
        }
        println!(
            "conjugation by {} realizes {} on 8 random words",
            kind.name(),
            table.name().name()
        );
    }

    println!("all checks passed");
    Ok(())
}
