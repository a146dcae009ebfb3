//! Formal linear combinations of words in the generator alphabet.
//!
//! An [`AlgebraExpression`] is a finite sum `Σ cᵢ · wᵢ` with rational
//! coefficients and words over the sixteen-symbol alphabet
//! `{e, f, k, k⁻¹, x, y, y⁻¹, z, νx, νy, νz, nx, ny, nz, Λ, 1}`. The empty
//! word (and the symbol `1`) denote the identity. Expressions are evaluated
//! on a module by substituting the realized matrix for each symbol; they can
//! also be rewritten symbol-by-symbol through a substitution map, which is
//! how automorphisms act on words.
//!
//! This module also hosts the defining-relation residuals of both
//! presentations and the standard derived expressions (Casimir forms,
//! generator-recovery identities, twisted commutation of the n-elements),
//! each shaped so that a correct module evaluates it to zero (or, where
//! noted, to the identity).

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{QContext, Rat};

/// One symbol of the generator alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum GenSym {
    E,
    F,
    K,
    KInv,
    X,
    Y,
    YInv,
    Z,
    NuX,
    NuY,
    NuZ,
    Nx,
    Ny,
    Nz,
    /// The normalized Casimir element Λ.
    Casimir,
    /// The identity of the algebra.
    One,
}

impl GenSym {
    /// Stable lowercase name, used in JSON generator maps and reports.
    pub fn name(self) -> &'static str {
        match self {
            GenSym::E => "e",
            GenSym::F => "f",
            GenSym::K => "k",
            GenSym::KInv => "kinv",
            GenSym::X => "x",
            GenSym::Y => "y",
            GenSym::YInv => "yinv",
            GenSym::Z => "z",
            GenSym::NuX => "nux",
            GenSym::NuY => "nuy",
            GenSym::NuZ => "nuz",
            GenSym::Nx => "nx",
            GenSym::Ny => "ny",
            GenSym::Nz => "nz",
            GenSym::Casimir => "lambda",
            GenSym::One => "one",
        }
    }

    pub fn from_name(s: &str) -> Option<GenSym> {
        Some(match s {
            "e" => GenSym::E,
            "f" => GenSym::F,
            "k" => GenSym::K,
            "kinv" => GenSym::KInv,
            "x" => GenSym::X,
            "y" => GenSym::Y,
            "yinv" => GenSym::YInv,
            "z" => GenSym::Z,
            "nux" => GenSym::NuX,
            "nuy" => GenSym::NuY,
            "nuz" => GenSym::NuZ,
            "nx" => GenSym::Nx,
            "ny" => GenSym::Ny,
            "nz" => GenSym::Nz,
            "lambda" => GenSym::Casimir,
            "one" => GenSym::One,
            _ => return None,
        })
    }

    /// The eight-symbol sub-alphabet random words are drawn from: both
    /// presentations' generators.
    pub const WORD_ALPHABET: [GenSym; 8] = [
        GenSym::E,
        GenSym::F,
        GenSym::K,
        GenSym::KInv,
        GenSym::X,
        GenSym::Y,
        GenSym::YInv,
        GenSym::Z,
    ];
}

/// Map from symbols to their realized matrices on a fixed module.
pub type SymbolTable = BTreeMap<GenSym, Matrix>;

/// A word in the alphabet; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Word(pub Vec<GenSym>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn display(&self) -> String {
        if self.0.is_empty() {
            "1".to_string()
        } else {
            self.0.iter().map(|s| s.name()).collect::<Vec<_>>().join("·")
        }
    }
}

/// Finite ℚ-linear combination of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraExpression {
    terms: Vec<(Rat, Word)>,
}

impl AlgebraExpression {
    pub fn zero() -> Self {
        AlgebraExpression { terms: Vec::new() }
    }

    /// The identity of the algebra (coefficient 1 on the empty word).
    pub fn one() -> Self {
        AlgebraExpression { terms: vec![(Rat::one(), Word::empty())] }
    }

    pub fn symbol(s: GenSym) -> Self {
        AlgebraExpression::word(&[s])
    }

    pub fn word(symbols: &[GenSym]) -> Self {
        AlgebraExpression { terms: vec![(Rat::one(), Word(symbols.to_vec()))] }
    }

    pub fn term(coeff: Rat, symbols: &[GenSym]) -> Self {
        if coeff.is_zero() {
            return AlgebraExpression::zero();
        }
        AlgebraExpression { terms: vec![(coeff, Word(symbols.to_vec()))] }
    }

    pub fn terms(&self) -> &[(Rat, Word)] {
        &self.terms
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return AlgebraExpression::zero();
        }
        AlgebraExpression {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect(),
        }
    }

    /// Collects like words and drops zero terms; the result is in a
    /// deterministic (word-sorted) normal form. Two expressions that are
    /// equal as elements of the free algebra normalize identically.
    pub fn normalized(&self) -> Self {
        let mut map: BTreeMap<Word, Rat> = BTreeMap::new();
        for (c, w) in &self.terms {
            let entry = map.entry(w.clone()).or_insert_with(Rat::zero);
            *entry = &*entry + c;
        }
        AlgebraExpression {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect(),
        }
    }

    /// Evaluates on a module: each symbol is replaced by its matrix from the
    /// table (the symbol `1` and the empty word by the identity matrix of
    /// size `dim`). Unknown symbols are an error, not a silent zero.
    pub fn eval(&self, table: &SymbolTable, dim: usize) -> Result<Matrix> {
        let mut acc = Matrix::zeros(dim, dim);
        for (coeff, word) in &self.terms {
            let mut m = Matrix::identity(dim);
            for sym in &word.0 {
                if *sym == GenSym::One {
                    continue;
                }
                let g = table
                    .get(sym)
                    .ok_or_else(|| Error::UnknownSymbol(sym.name().to_string()))?;
                m = &m * g;
            }
            acc = &acc + &m.scale(coeff);
        }
        Ok(acc)
    }

    /// Rewrites every symbol through `images` (a substitution / algebra-map
    /// table) and expands the resulting products of sums. Symbols without an
    /// image are an error.
    pub fn substitute(&self, images: &BTreeMap<GenSym, AlgebraExpression>) -> Result<Self> {
        let mut out = AlgebraExpression::zero();
        for (coeff, word) in &self.terms {
            let mut acc = AlgebraExpression::one().scale(coeff);
            for sym in &word.0 {
                if *sym == GenSym::One {
                    continue;
                }
                let image = images
                    .get(sym)
                    .ok_or_else(|| Error::UnknownSymbol(sym.name().to_string()))?;
                acc = &acc * image;
            }
            out = &out + &acc;
        }
        Ok(out.normalized())
    }
}

impl Add for &AlgebraExpression {
    type Output = AlgebraExpression;
    fn add(self, rhs: &AlgebraExpression) -> AlgebraExpression {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        AlgebraExpression { terms }
    }
}

impl Sub for &AlgebraExpression {
    type Output = AlgebraExpression;
    fn sub(self, rhs: &AlgebraExpression) -> AlgebraExpression {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraExpression {
    type Output = AlgebraExpression;
    fn neg(self) -> AlgebraExpression {
        AlgebraExpression {
            terms: self.terms.iter().map(|(c, w)| (-c, w.clone())).collect(),
        }
    }
}

impl Mul for &AlgebraExpression {
    type Output = AlgebraExpression;
    fn mul(self, rhs: &AlgebraExpression) -> AlgebraExpression {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &rhs.terms {
                let mut w = u.0.clone();
                w.extend(v.0.iter().copied());
                terms.push((a * b, Word(w)));
            }
        }
        AlgebraExpression { terms }
    }
}

/// Word `k^m` (resp. `k⁻|m|` for negative m) over `{K, KInv}`.
pub fn k_power(m: i64) -> Vec<GenSym> {
    let sym = if m >= 0 { GenSym::K } else { GenSym::KInv };
    vec![sym; m.unsigned_abs() as usize]
}

/// Word `y^m` over `{Y, YInv}`.
pub fn y_power(m: i64) -> Vec<GenSym> {
    let sym = if m >= 0 { GenSym::Y } else { GenSym::YInv };
    vec![sym; m.unsigned_abs() as usize]
}

/// Named residual expressions of the Chevalley presentation; a valid module
/// evaluates every one of them to zero.
///
/// `k k⁻¹ = k⁻¹ k = 1`, `k e k⁻¹ = q² e`, `k f k⁻¹ = q⁻² f`,
/// `e f - f e = (k - k⁻¹)/(q - q⁻¹)`.
pub fn chevalley_relations(ctx: &QContext) -> Vec<(&'static str, AlgebraExpression)> {
    use GenSym::*;
    let one = AlgebraExpression::one();
    let c = ctx.q_minus_q_inv().inv();
    vec![
        ("chev/k-kinv", &AlgebraExpression::word(&[K, KInv]) - &one),
        ("chev/kinv-k", &AlgebraExpression::word(&[KInv, K]) - &one),
        (
            "chev/ke-q2ek",
            &AlgebraExpression::word(&[K, E]) - &AlgebraExpression::term(ctx.q_pow(2), &[E, K]),
        ),
        (
            "chev/kf-qm2fk",
            &AlgebraExpression::word(&[K, F]) - &AlgebraExpression::term(ctx.q_pow(-2), &[F, K]),
        ),
        (
            "chev/ef-fe-k",
            &(&(&AlgebraExpression::word(&[E, F]) - &AlgebraExpression::word(&[F, E]))
                - &AlgebraExpression::term(c.clone(), &[K]))
                + &AlgebraExpression::term(c, &[KInv]),
        ),
    ]
}

/// Named residual expressions of the equitable presentation; zero on valid
/// modules. The inverse pair for y plus the three cyclic relations
/// `(q·gh - q⁻¹·hg)/(q - q⁻¹) = 1` for (g,h) running over (x,y), (y,z), (z,x).
pub fn equitable_relations(ctx: &QContext) -> Vec<(&'static str, AlgebraExpression)> {
    use GenSym::*;
    let one = AlgebraExpression::one();
    let c = ctx.q_minus_q_inv().inv();
    let cq = ctx.q() * &c;
    let cqi = &ctx.q_pow(-1) * &c;
    let cyclic = |g: GenSym, h: GenSym| {
        &(&AlgebraExpression::term(cq.clone(), &[g, h])
            - &AlgebraExpression::term(cqi.clone(), &[h, g]))
            - &one
    };
    vec![
        ("equit/y-yinv", &AlgebraExpression::word(&[Y, YInv]) - &one),
        ("equit/yinv-y", &AlgebraExpression::word(&[YInv, Y]) - &one),
        ("equit/xy", cyclic(X, Y)),
        ("equit/yz", cyclic(Y, Z)),
        ("equit/zx", cyclic(Z, X)),
    ]
}

/// The normalized Casimir element in Chevalley generators:
/// `Λ = (q - q⁻¹)² e f + q⁻¹ k + q k⁻¹`.
pub fn casimir_chevalley(ctx: &QContext) -> AlgebraExpression {
    use GenSym::*;
    let s = ctx.q_minus_q_inv();
    &(&AlgebraExpression::term(&s * &s, &[E, F]) + &AlgebraExpression::term(ctx.q_pow(-1), &[K]))
        + &AlgebraExpression::term(ctx.q_pow(1), &[KInv])
}

/// The six equitable expressions for the normalized Casimir element, all
/// equal to Λ on every module:
///
/// ```text
/// q x + q⁻¹ y + q z - q x y z        q⁻¹ x + q y + q⁻¹ z - q⁻¹ z y x
/// q y + q⁻¹ z + q x - q y z x        q⁻¹ y + q z + q⁻¹ x - q⁻¹ x z y
/// q z + q⁻¹ x + q y - q z x y        q⁻¹ z + q x + q⁻¹ y - q⁻¹ y x z
/// ```
pub fn casimir_equitable_forms(ctx: &QContext) -> Vec<(&'static str, AlgebraExpression)> {
    use GenSym::*;
    let q = ctx.q_pow(1);
    let qi = ctx.q_pow(-1);
    let form = |c1: &Rat, g1, c2: &Rat, g2, c3: &Rat, g3, cw: &Rat, w: &[GenSym]| {
        &(&(&AlgebraExpression::term(c1.clone(), &[g1])
            + &AlgebraExpression::term(c2.clone(), &[g2]))
            + &AlgebraExpression::term(c3.clone(), &[g3]))
            - &AlgebraExpression::term(cw.clone(), w)
    };
    vec![
        ("casimir/xyz", form(&q, X, &qi, Y, &q, Z, &q, &[X, Y, Z])),
        ("casimir/zyx", form(&qi, X, &q, Y, &qi, Z, &qi, &[Z, Y, X])),
        ("casimir/yzx", form(&q, Y, &qi, Z, &q, X, &q, &[Y, Z, X])),
        ("casimir/xzy", form(&qi, Y, &q, Z, &qi, X, &qi, &[X, Z, Y])),
        ("casimir/zxy", form(&q, Z, &qi, X, &q, Y, &q, &[Z, X, Y])),
        ("casimir/yxz", form(&qi, Z, &q, X, &qi, Y, &qi, &[Y, X, Z])),
    ]
}

/// Generator-recovery residuals: the equitable generators x and z are
/// determined by y and the nilpotent parts, via `νz = q(1 - xy)` and
/// `νx = q(1 - yz)`: `x = y⁻¹ - q⁻¹ νz y⁻¹` and `z = y⁻¹ - q⁻¹ y⁻¹ νx`
/// (zero residuals).
pub fn generator_recovery(ctx: &QContext) -> Vec<(&'static str, AlgebraExpression)> {
    use GenSym::*;
    let qi = ctx.q_pow(-1);
    vec![
        (
            "recover/x",
            &(&AlgebraExpression::symbol(X) - &AlgebraExpression::symbol(YInv))
                + &AlgebraExpression::term(qi.clone(), &[NuZ, YInv]),
        ),
        (
            "recover/z",
            &(&AlgebraExpression::symbol(Z) - &AlgebraExpression::symbol(YInv))
                + &AlgebraExpression::term(qi, &[YInv, NuX]),
        ),
    ]
}

/// Twisted commutation residuals between the equitable generators and the
/// n-elements: `x ny = q² ny x`, `y nz = q² nz y`, `z nx = q² nx z`,
/// `x nz = q⁻² nz x`, `y nx = q⁻² nx y`, `z ny = q⁻² ny z`.
pub fn n_commutation(ctx: &QContext) -> Vec<(&'static str, AlgebraExpression)> {
    use GenSym::*;
    let pair = |g: GenSym, n: GenSym, e: i64| {
        let name: &'static str = match (g, n) {
            (X, Ny) => "twist/x-ny",
            (Y, Nz) => "twist/y-nz",
            (Z, Nx) => "twist/z-nx",
            (X, Nz) => "twist/x-nz",
            (Y, Nx) => "twist/y-nx",
            (Z, Ny) => "twist/z-ny",
            _ => unreachable!(),
        };
        (
            name,
            &AlgebraExpression::word(&[g, n]) - &AlgebraExpression::term(ctx.q_pow(e), &[n, g]),
        )
    };
    vec![
        pair(X, Ny, 2),
        pair(Y, Nz, 2),
        pair(Z, Nx, 2),
        pair(X, Nz, -2),
        pair(Y, Nx, -2),
        pair(Z, Ny, -2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{IdentKind, ThetaMode};

    fn ctx() -> QContext {
        QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary).unwrap()
    }

    fn table_2x2() -> SymbolTable {
        // A small fake table: e = [[0,1],[0,0]], f = [[0,0],[1,0]], k = diag(4, 1/4).
        let mut t = SymbolTable::new();
        t.insert(
            GenSym::E,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()]).unwrap(),
        );
        t.insert(
            GenSym::F,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::zero(), Rat::one(), Rat::zero()]).unwrap(),
        );
        t.insert(GenSym::K, Matrix::diagonal(&[Rat::int(4), Rat::frac(1, 4)]));
        t.insert(GenSym::KInv, Matrix::diagonal(&[Rat::frac(1, 4), Rat::int(4)]));
        t
    }

    #[test]
    fn empty_word_evaluates_to_identity() {
        let t = table_2x2();
        assert_eq!(AlgebraExpression::one().eval(&t, 2).unwrap(), Matrix::identity(2));
        assert_eq!(
            AlgebraExpression::symbol(GenSym::One).eval(&t, 2).unwrap(),
            Matrix::identity(2)
        );
    }

    #[test]
    fn evaluation_is_left_to_right_product() {
        let t = table_2x2();
        // e f = diag(1, 0); f e = diag(0, 1).
        let ef = AlgebraExpression::word(&[GenSym::E, GenSym::F]).eval(&t, 2).unwrap();
        assert_eq!(ef, Matrix::diagonal(&[Rat::one(), Rat::zero()]));
        let fe = AlgebraExpression::word(&[GenSym::F, GenSym::E]).eval(&t, 2).unwrap();
        assert_eq!(fe, Matrix::diagonal(&[Rat::zero(), Rat::one()]));
    }

    #[test]
    fn unknown_symbols_error_instead_of_vanishing() {
        let t = table_2x2();
        let r = AlgebraExpression::symbol(GenSym::Nx).eval(&t, 2);
        assert!(matches!(r, Err(Error::UnknownSymbol(s)) if s == "nx"));
    }

    #[test]
    fn chevalley_relations_vanish_on_the_standard_weight_one_table() {
        let t = table_2x2();
        for (name, rel) in chevalley_relations(&ctx()) {
            let v = rel.eval(&t, 2).unwrap();
            assert!(v.is_zero(), "{name} evaluated to {v:?}");
        }
    }

    #[test]
    fn normalization_collects_like_words() {
        use GenSym::*;
        let a = AlgebraExpression::term(Rat::int(2), &[E, F]);
        let b = AlgebraExpression::term(Rat::int(3), &[E, F]);
        let c = &(&a + &b) - &AlgebraExpression::term(Rat::int(5), &[E, F]);
        assert_eq!(c.normalized(), AlgebraExpression::zero());
    }

    #[test]
    fn substitution_expands_products() {
        use GenSym::*;
        // e ↦ e + f, f ↦ f; then ef ↦ (e + f)f = ef + ff.
        let mut images = BTreeMap::new();
        images.insert(E, &AlgebraExpression::symbol(E) + &AlgebraExpression::symbol(F));
        images.insert(F, AlgebraExpression::symbol(F));
        let expr = AlgebraExpression::word(&[E, F]);
        let out = expr.substitute(&images).unwrap();
        let expect = (&AlgebraExpression::word(&[E, F]) + &AlgebraExpression::word(&[F, F]))
            .normalized();
        assert_eq!(out, expect);
    }

    #[test]
    fn power_words() {
        assert_eq!(k_power(3), vec![GenSym::K; 3]);
        assert_eq!(k_power(-2), vec![GenSym::KInv; 2]);
        assert!(k_power(0).is_empty());
        assert_eq!(y_power(1), vec![GenSym::Y]);
    }

    #[test]
    fn symbol_names_round_trip() {
        for s in [
            GenSym::E,
            GenSym::F,
            GenSym::K,
            GenSym::KInv,
            GenSym::X,
            GenSym::Y,
            GenSym::YInv,
            GenSym::Z,
            GenSym::NuX,
            GenSym::NuY,
            GenSym::NuZ,
            GenSym::Nx,
            GenSym::Ny,
            GenSym::Nz,
            GenSym::Casimir,
            GenSym::One,
        ] {
            assert_eq!(GenSym::from_name(s.name()), Some(s));
        }
        assert_eq!(GenSym::from_name("w"), None);
    }
}
