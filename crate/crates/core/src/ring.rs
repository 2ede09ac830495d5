//! Finitely presented commutative rings `k[x_1..x_n]/I` with canonical
//! normal-form residues, Bezout lifting of 1, and unit inversion.

use crate::field::{Coeff, FieldSpec};
use crate::groebner::{Budget, BudgetExceeded, GroebnerBasis};
use crate::poly::{MonomialOrder, ParseError, PolyRing, Polynomial};
use num::rational::BigRational;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("invalid field: {0}")]
    Field(String),
    #[error("variable name {0:?} is not a valid identifier")]
    BadVariable(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("the relations generate the unit ideal; the quotient ring is zero")]
    ZeroRing,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("coefficient not representable: {0}")]
    Coefficient(String),
}

struct RingInner {
    pr: PolyRing,
    relations: Vec<Polynomial>,
    gb: GroebnerBasis,
    budget: Budget,
}

/// A validated finitely presented ring. Cheap to clone; the reduced
/// Groebner basis of the defining ideal is computed once at construction
/// and shared. Two specs are equal when field, variables, order, and the
/// reduced basis agree (so different presentations of the same ideal
/// compare equal).
#[derive(Clone)]
pub struct RingSpec(Arc<RingInner>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.pr == other.0.pr && self.0.gb == other.0.gb)
    }
}
impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingSpec({}[{}]/({} relations), {})",
            self.0.pr.field,
            self.0.pr.vars.join(","),
            self.0.relations.len(),
            self.0.pr.order
        )
    }
}

impl RingSpec {
    /// Builds the ring, computing and caching the reduced Groebner basis of
    /// the relation ideal. Rejects zero rings (1 in the ideal).
    pub fn new(
        field: FieldSpec,
        vars: Vec<String>,
        order: MonomialOrder,
        relations: Vec<Polynomial>,
        budget: Budget,
    ) -> Result<RingSpec, RingError> {
        if let FieldSpec::PrimeField { p } = field {
            // re-validate so hand-built specs can't smuggle a bad modulus
            FieldSpec::prime_field(p).map_err(RingError::Field)?;
        }
        for v in &vars {
            let mut chars = v.chars();
            let head_ok = matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_alphanumeric() || c == '_') {
                return Err(RingError::BadVariable(v.clone()));
            }
        }
        if let Some(dup) = vars.iter().enumerate().find_map(|(i, v)| {
            vars[..i].contains(v).then(|| v.clone())
        }) {
            return Err(RingError::DuplicateVariable(dup));
        }
        let pr = PolyRing::new(field, vars, order);
        let gb = pr.buchberger(&relations, &budget)?;
        if gb.contains_one() {
            return Err(RingError::ZeroRing);
        }
        Ok(RingSpec(Arc::new(RingInner { pr, relations, gb, budget })))
    }

    /// Parses relation strings in this ring's own variables; convenience for
    /// building a ring straight from a document.
    pub fn parse_new(
        field: FieldSpec,
        vars: Vec<String>,
        order: MonomialOrder,
        relation_strs: &[&str],
        budget: Budget,
    ) -> Result<RingSpec, RingError> {
        let pr = PolyRing::new(field.clone(), vars.clone(), order);
        let relations = relation_strs
            .iter()
            .map(|s| pr.parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        RingSpec::new(field, vars, order, relations, budget)
    }

    pub fn poly_ring(&self) -> &PolyRing {
        &self.0.pr
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.pr.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.pr.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.pr.order
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.0.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.0.gb
    }

    pub fn budget(&self) -> &Budget {
        &self.0.budget
    }

    /// The canonical residue of a raw polynomial.
    pub fn element(&self, p: Polynomial) -> RingElement {
        let nf = self.0.pr.normal_form(&p, &self.0.gb);
        RingElement { ring: self.clone(), poly: nf }
    }

    pub fn parse_element(&self, s: &str) -> Result<RingElement, ParseError> {
        Ok(self.element(self.0.pr.parse(s)?))
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), poly: Polynomial::zero() }
    }

    pub fn one(&self) -> RingElement {
        self.element(self.0.pr.one())
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        self.element(self.0.pr.from_i64(n))
    }

    pub fn var(&self, i: usize) -> RingElement {
        self.element(self.0.pr.var(i))
    }

    pub fn coeff_from_rational(&self, x: &BigRational) -> Result<Coeff, RingError> {
        self.field().from_rational(x).map_err(RingError::Coefficient)
    }

    /// Bezout lifting: writes 1 as a combination of the given elements when
    /// they generate the unit ideal of this ring. `NotUnit` is a definite
    /// negative answer, not a failure. Soundness is checked on every
    /// successful return by re-expanding the combination.
    pub fn lift_one(&self, gens: &[RingElement]) -> Result<LiftOutcome, BudgetExceeded> {
        assert!(!gens.is_empty(), "lift_one requires at least one generator");
        for g in gens {
            assert!(g.ring == *self, "lift_one: element from a different ring");
        }
        let pr = &self.0.pr;
        let mut free_gens: Vec<Polynomial> = gens.iter().map(|g| g.poly.clone()).collect();
        free_gens.extend(self.0.relations.iter().cloned());
        let Some(cs) = pr.lift_one_free(&free_gens, &self.0.budget)? else {
            return Ok(LiftOutcome::NotUnit);
        };
        let witness: Vec<RingElement> =
            cs[..gens.len()].iter().map(|c| self.element(c.clone())).collect();
        let mut acc = self.zero();
        for (c, g) in witness.iter().zip(gens) {
            acc = acc.add(&c.mul(g));
        }
        assert!(acc.is_one(), "lift_one witness failed re-expansion; this is a bug");
        Ok(LiftOutcome::Witness(witness))
    }

    /// Exact inverse of a ring element, or a definite `NotUnit`.
    pub fn invert_unit(&self, e: &RingElement) -> Result<LiftOutcome, BudgetExceeded> {
        if e.is_zero() {
            return Ok(LiftOutcome::NotUnit);
        }
        match self.lift_one(std::slice::from_ref(e))? {
            LiftOutcome::Witness(mut w) => Ok(LiftOutcome::Witness(vec![w.remove(0)])),
            LiftOutcome::NotUnit => Ok(LiftOutcome::NotUnit),
        }
    }
}

/// Outcome of a Bezout lift: a verified witness, or a definite negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftOutcome {
    Witness(Vec<RingElement>),
    NotUnit,
}

impl LiftOutcome {
    pub fn into_witness(self) -> Option<Vec<RingElement>> {
        match self {
            LiftOutcome::Witness(w) => Some(w),
            LiftOutcome::NotUnit => None,
        }
    }
}

/// A canonical-normal-form residue in a [`RingSpec`]. Equality is syntactic
/// equality of normal forms, which coincides with equality in the ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: RingSpec,
    poly: Polynomial,
}

impl RingElement {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.as_constant(self.ring.field()).map(|c| self.ring.field().is_one(&c))
            == Some(true)
    }

    /// The constant value when the residue lies in the coefficient field.
    pub fn as_constant(&self) -> Option<Coeff> {
        self.poly.as_constant(self.ring.field())
    }

    fn same_ring(&self, other: &RingElement) {
        assert!(self.ring == other.ring, "operands from different rings");
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.same_ring(other);
        // normal forms are closed under addition: no reduction needed
        RingElement {
            ring: self.ring.clone(),
            poly: self.ring.poly_ring().add(&self.poly, &other.poly),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.same_ring(other);
        RingElement {
            ring: self.ring.clone(),
            poly: self.ring.poly_ring().sub(&self.poly, &other.poly),
        }
    }

    pub fn neg(&self) -> RingElement {
        RingElement { ring: self.ring.clone(), poly: self.ring.poly_ring().neg(&self.poly) }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.same_ring(other);
        let raw = self.ring.poly_ring().mul(&self.poly, &other.poly);
        self.ring.element(raw)
    }

    pub fn scale(&self, c: &Coeff) -> RingElement {
        RingElement { ring: self.ring.clone(), poly: self.ring.poly_ring().scale(&self.poly, c) }
    }

    pub fn to_string(&self) -> String {
        self.ring.poly_ring().to_string(&self.poly)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> RingSpec {
        RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
            &[],
            Budget::default(),
        )
        .unwrap()
    }

    #[test]
    fn zero_ring_rejected() {
        let err = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into()],
            MonomialOrder::Lex,
            &["x", "1 - x"],
            Budget::default(),
        )
        .unwrap_err();
        assert_eq!(err, RingError::ZeroRing);
    }

    #[test]
    fn duplicate_and_bad_variables_rejected() {
        let e = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into(), "x".into()],
            MonomialOrder::Lex,
            &[],
            Budget::default(),
        )
        .unwrap_err();
        assert!(matches!(e, RingError::DuplicateVariable(_)));
        let e = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["2bad".into()],
            MonomialOrder::Lex,
            &[],
            Budget::default(),
        )
        .unwrap_err();
        assert!(matches!(e, RingError::BadVariable(_)));
    }

    #[test]
    fn residues_are_idempotent_normal_forms() {
        let r = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into(), "y".into()],
            MonomialOrder::Lex,
            &["x*y - 1"],
            Budget::default(),
        )
        .unwrap();
        let e = r.parse_element("x^2*y").unwrap();
        assert_eq!(e.to_string(), "x");
        let again = r.element(e.poly().clone());
        assert_eq!(e, again);
    }

    #[test]
    fn lift_one_examples() {
        let r = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into()],
            MonomialOrder::Lex,
            &[],
            Budget::default(),
        )
        .unwrap();
        let gens = vec![r.parse_element("x").unwrap(), r.parse_element("1 - x").unwrap()];
        let w = r.lift_one(&gens).unwrap().into_witness().unwrap();
        assert_eq!(w, vec![r.one(), r.one()]);

        let r2 = qxy();
        let gens = vec![r2.parse_element("x").unwrap(), r2.parse_element("y").unwrap()];
        assert_eq!(r2.lift_one(&gens).unwrap(), LiftOutcome::NotUnit);

        let gens = vec![
            r2.parse_element("x").unwrap(),
            r2.parse_element("y").unwrap(),
            r2.parse_element("1 - x - y").unwrap(),
        ];
        let w = r2.lift_one(&gens).unwrap().into_witness().unwrap();
        let mut acc = r2.zero();
        for (c, g) in w.iter().zip(&gens) {
            acc = acc.add(&c.mul(g));
        }
        assert!(acc.is_one());
    }

    #[test]
    fn invert_unit_examples() {
        let r = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into(), "y".into()],
            MonomialOrder::Lex,
            &["x*y - 1"],
            Budget::default(),
        )
        .unwrap();
        let one = r.one();
        assert_eq!(
            r.invert_unit(&one).unwrap().into_witness().unwrap()[0],
            r.one()
        );
        let x = r.parse_element("x").unwrap();
        let inv = r.invert_unit(&x).unwrap().into_witness().unwrap().remove(0);
        assert_eq!(inv, r.parse_element("y").unwrap());

        let free = qxy();
        let x = free.parse_element("x").unwrap();
        assert_eq!(free.invert_unit(&x).unwrap(), LiftOutcome::NotUnit);
        assert_eq!(free.invert_unit(&free.zero()).unwrap(), LiftOutcome::NotUnit);
    }

    #[test]
    fn quotient_with_zero_divisors() {
        // x*(x-1) = 0: neither factor is a unit or zero
        let r = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into()],
            MonomialOrder::Lex,
            &["x^2 - x"],
            Budget::default(),
        )
        .unwrap();
        let x = r.parse_element("x").unwrap();
        let y = r.parse_element("x - 1").unwrap();
        assert!(x.mul(&y).is_zero());
        assert!(!x.is_zero());
        assert_eq!(r.invert_unit(&x).unwrap(), LiftOutcome::NotUnit);
    }

    #[test]
    fn structural_ring_equality() {
        let a = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into()],
            MonomialOrder::Lex,
            &["x^2 - 2"],
            Budget::default(),
        )
        .unwrap();
        let b = RingSpec::parse_new(
            FieldSpec::Rationals,
            vec!["x".into()],
            MonomialOrder::Lex,
            &["2*x^2 - 4"],
            Budget::default(),
        )
        .unwrap();
        assert_eq!(a, b);
        let xa = a.parse_element("x").unwrap();
        let xb = b.parse_element("x").unwrap();
        assert_eq!(xa.mul(&xb).to_string(), "2");
    }
}
