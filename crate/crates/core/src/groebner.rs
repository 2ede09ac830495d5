//! Buchberger completion with step/degree budgets, normal forms, and an
//! extended variant that tracks how each basis element is written in terms
//! of the input generators (used to lift Bezout witnesses for 1).

use crate::field::Coeff;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Resource limits for basis computation. Exceeding a limit is a reported
/// outcome, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-polynomial reduction steps.
    pub max_steps: usize,
    /// Maximum total degree any intermediate polynomial may reach.
    pub max_degree: u32,
    /// Maximum total term count across all tracked cofactors.
    pub transcript_cap: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_steps: 20_000, max_degree: 64, transcript_cap: 2_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BudgetExceeded {
    #[error("basis computation exceeded the step budget ({0} S-polynomial reductions)")]
    Steps(usize),
    #[error("basis computation exceeded the total-degree budget ({0})")]
    Degree(u32),
    #[error("witness transcript exceeded the term cap ({0})")]
    Transcript(usize),
}

/// A reduced Groebner basis: monic generators, no generator's term divisible
/// by another generator's leading monomial, sorted by leading monomial
/// (descending) for a canonical representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the basis generates the unit ideal.
    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|g| matches!(g.leading(), Some((m, _)) if m.is_one()))
    }
}

/// Which term to cancel next and which divisor to use; two strategies make
/// the confluence of normal forms observable in tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Reduce the leading reducible term, using the first dividing generator.
    LeadingFirst,
    /// Reduce the lowest reducible term, using the last dividing generator.
    TrailingLast,
}

impl PolyRing {
    /// Full normal form: no term of the result is divisible by any leading
    /// monomial of `gb`. Against a Groebner basis this is the canonical
    /// representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
        self.normal_form_with(f, gb.generators(), ReductionStrategy::LeadingFirst)
    }

    pub fn normal_form_with(
        &self,
        f: &Polynomial,
        gens: &[Polynomial],
        strategy: ReductionStrategy,
    ) -> Polynomial {
        let mut work = f.clone();
        loop {
            let target: Option<(Monomial, Coeff, usize)> = match strategy {
                ReductionStrategy::LeadingFirst => work.terms().iter().find_map(|(m, c)| {
                    gens.iter()
                        .position(|g| matches!(g.leading(), Some((glm, _)) if glm.divides(m)))
                        .map(|gi| (m.clone(), c.clone(), gi))
                }),
                ReductionStrategy::TrailingLast => work.terms().iter().rev().find_map(|(m, c)| {
                    gens.iter()
                        .rposition(|g| matches!(g.leading(), Some((glm, _)) if glm.divides(m)))
                        .map(|gi| (m.clone(), c.clone(), gi))
                }),
            };
            let Some((m, c, gi)) = target else { return work };
            let g = &gens[gi];
            let (glm, _) = g.leading().unwrap();
            let quot = glm.quotient(&m);
            work = self.sub(&work, &self.mul_term(g, &quot, &c));
        }
    }

    /// Like [`normal_form`], also returning the quotients: `f = sum q_i g_i + r`.
    pub fn reduce_with_quotients(
        &self,
        f: &Polynomial,
        gens: &[Polynomial],
    ) -> (Vec<Polynomial>, Polynomial) {
        let mut quots = vec![Polynomial::zero(); gens.len()];
        let mut work = f.clone();
        loop {
            let target = work.terms().iter().find_map(|(m, c)| {
                gens.iter()
                    .position(|g| matches!(g.leading(), Some((glm, _)) if glm.divides(m)))
                    .map(|gi| (m.clone(), c.clone(), gi))
            });
            let Some((m, c, gi)) = target else { return (quots, work) };
            let g = &gens[gi];
            let (glm, _) = g.leading().unwrap();
            let quot = glm.quotient(&m);
            quots[gi] = self.add(&quots[gi], &self.monomial(quot.clone(), c.clone()));
            work = self.sub(&work, &self.mul_term(g, &quot, &c));
        }
    }

    /// The reduced Groebner basis of the ideal generated by `gens`.
    pub fn buchberger(
        &self,
        gens: &[Polynomial],
        budget: &Budget,
    ) -> Result<GroebnerBasis, BudgetExceeded> {
        let tracked = self.buchberger_extended(gens, budget)?;
        Ok(GroebnerBasis { gens: tracked.into_iter().map(|t| t.poly).collect() })
    }

    /// Extended Buchberger: each basis element carries its expression in the
    /// original generators (`poly = sum cofactors[i] * gens[i]` exactly in
    /// the free ring). The result is the reduced basis.
    pub fn buchberger_extended(
        &self,
        gens: &[Polynomial],
        budget: &Budget,
    ) -> Result<Vec<Tracked>, BudgetExceeded> {
        let mut basis: Vec<Tracked> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut cof = vec![Polynomial::zero(); gens.len()];
            cof[i] = self.one();
            basis.push(self.make_monic(Tracked { poly: g.clone(), cofactors: cof }));
        }

        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                pairs.push((i, j));
            }
        }

        let mut steps = 0usize;
        while let Some((i, j)) = pairs.pop() {
            steps += 1;
            if steps > budget.max_steps {
                return Err(BudgetExceeded::Steps(budget.max_steps));
            }
            let (fi, fj) = (&basis[i], &basis[j]);
            let (lmi, _) = fi.poly.leading().unwrap();
            let (lmj, _) = fj.poly.leading().unwrap();
            // Buchberger's first criterion: coprime leading monomials
            let lcm = lmi.lcm(lmj);
            if lcm.degree() == lmi.degree() + lmj.degree() {
                continue;
            }
            let qi = lmi.quotient(&lcm);
            let qj = lmj.quotient(&lcm);
            let spoly = self.sub(
                &self.mul_term(&fi.poly, &qi, &self.field.one()),
                &self.mul_term(&fj.poly, &qj, &self.field.one()),
            );
            let scof = self.cof_sub(
                &self.cof_mul_term(&fi.cofactors, &qi, &self.field.one()),
                &self.cof_mul_term(&fj.cofactors, &qj, &self.field.one()),
            );
            let reduced = self.reduce_tracked(
                Tracked { poly: spoly, cofactors: scof },
                &basis,
                budget,
            )?;
            if reduced.poly.is_zero() {
                continue;
            }
            if reduced.poly.total_degree() > budget.max_degree as u64 {
                return Err(BudgetExceeded::Degree(budget.max_degree));
            }
            let reduced = self.make_monic(reduced);
            let new_idx = basis.len();
            basis.push(reduced);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
            self.check_transcript(&basis, budget)?;
        }

        Ok(self.reduce_basis(basis, budget)?)
    }

    fn check_transcript(&self, basis: &[Tracked], budget: &Budget) -> Result<(), BudgetExceeded> {
        let total: usize = basis
            .iter()
            .map(|t| t.cofactors.iter().map(|c| c.len()).sum::<usize>())
            .sum();
        if total > budget.transcript_cap {
            return Err(BudgetExceeded::Transcript(budget.transcript_cap));
        }
        Ok(())
    }

    fn make_monic(&self, mut t: Tracked) -> Tracked {
        let Some((_, lc)) = t.poly.leading() else { return t };
        if self.field.is_one(lc) {
            return t;
        }
        let inv = self.field.inv(&lc.clone());
        t.poly = self.scale(&t.poly, &inv);
        t.cofactors = t.cofactors.iter().map(|c| self.scale(c, &inv)).collect();
        t
    }

    /// Full reduction of a tracked polynomial against the current basis.
    fn reduce_tracked(
        &self,
        mut t: Tracked,
        basis: &[Tracked],
        budget: &Budget,
    ) -> Result<Tracked, BudgetExceeded> {
        loop {
            let target = t.poly.terms().iter().find_map(|(m, c)| {
                basis
                    .iter()
                    .position(|g| matches!(g.poly.leading(), Some((glm, _)) if glm.divides(m)))
                    .map(|gi| (m.clone(), c.clone(), gi))
            });
            let Some((m, c, gi)) = target else { return Ok(t) };
            let g = &basis[gi];
            let (glm, _) = g.poly.leading().unwrap();
            let quot = glm.quotient(&m);
            if m.degree() > budget.max_degree as u64 {
                return Err(BudgetExceeded::Degree(budget.max_degree));
            }
            t.poly = self.sub(&t.poly, &self.mul_term(&g.poly, &quot, &c));
            t.cofactors =
                self.cof_sub(&t.cofactors, &self.cof_mul_term(&g.cofactors, &quot, &c));
        }
    }

    /// Inter-reduce to the unique reduced basis, keeping cofactors in sync.
    fn reduce_basis(
        &self,
        mut basis: Vec<Tracked>,
        budget: &Budget,
    ) -> Result<Vec<Tracked>, BudgetExceeded> {
        // drop generators whose leading monomial is divisible by another's
        let mut keep: Vec<Tracked> = Vec::new();
        basis.sort_by(|x, y| {
            self.order.cmp(&x.poly.leading().unwrap().0, &y.poly.leading().unwrap().0)
        });
        for t in basis.into_iter() {
            let (lm, _) = t.poly.leading().unwrap();
            if !keep
                .iter()
                .any(|k| k.poly.leading().unwrap().0.divides(lm))
            {
                keep.push(t);
            }
        }
        // tail-reduce each survivor against the others
        let mut out: Vec<Tracked> = Vec::new();
        for i in 0..keep.len() {
            let others: Vec<Tracked> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t.clone())
                .collect();
            let reduced = self.reduce_tracked(keep[i].clone(), &others, budget)?;
            if !reduced.poly.is_zero() {
                out.push(self.make_monic(reduced));
            }
        }
        out.sort_by(|x, y| {
            self.order.cmp(&y.poly.leading().unwrap().0, &x.poly.leading().unwrap().0)
        });
        Ok(out)
    }
}

/// A polynomial together with its expression in the original generators.
#[derive(Clone, Debug)]
pub struct Tracked {
    pub poly: Polynomial,
    pub cofactors: Vec<Polynomial>,
}

impl PolyRing {
    fn cof_sub(&self, a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    fn cof_mul_term(&self, a: &[Polynomial], m: &Monomial, c: &Coeff) -> Vec<Polynomial> {
        a.iter().map(|x| self.mul_term(x, m, c)).collect()
    }

    /// Writes 1 as a combination of `gens` when they generate the unit
    /// ideal: returns `cs` with `sum cs[i]*gens[i] = 1` exactly in the free
    /// polynomial ring, or `None` when 1 is not in the ideal.
    pub fn lift_one_free(
        &self,
        gens: &[Polynomial],
        budget: &Budget,
    ) -> Result<Option<Vec<Polynomial>>, BudgetExceeded> {
        let basis = self.buchberger_extended(gens, budget)?;
        let polys: Vec<Polynomial> = basis.iter().map(|t| t.poly.clone()).collect();
        let (quots, rem) = self.reduce_with_quotients(&self.one(), &polys);
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut cs = vec![Polynomial::zero(); gens.len()];
        for (quot, t) in quots.iter().zip(&basis) {
            if quot.is_zero() {
                continue;
            }
            for (i, cof) in t.cofactors.iter().enumerate() {
                cs[i] = self.add(&cs[i], &self.mul(quot, cof));
            }
        }
        Ok(Some(cs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::MonomialOrder;

    fn ring(vars: &[&str], order: MonomialOrder) -> PolyRing {
        PolyRing::new(FieldSpec::Rationals, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x"], MonomialOrder::Lex);
        let gens = vec![r.parse("x").unwrap(), r.parse("1 - x").unwrap()];
        let gb = r.buchberger(&gens, &Budget::default()).unwrap();
        assert_eq!(gb.generators(), &[r.one()]);
        assert!(gb.contains_one());
    }

    #[test]
    fn hand_run_example() {
        // S-poly of x^2-1 and x*y-1 under lex x>y gives x - y, after which
        // both inputs tail-reduce to y^2 - 1
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gens = vec![r.parse("x^2 - 1").unwrap(), r.parse("x*y - 1").unwrap()];
        let gb = r.buchberger(&gens, &Budget::default()).unwrap();
        let expect = vec![r.parse("x - y").unwrap(), r.parse("y^2 - 1").unwrap()];
        assert_eq!(gb.generators(), &expect[..]);
    }

    #[test]
    fn zero_ideal() {
        let r = ring(&["x"], MonomialOrder::Lex);
        let gb = r.buchberger(&[], &Budget::default()).unwrap();
        assert!(gb.is_empty());
        let f = r.parse("x^3 + 1/2").unwrap();
        assert_eq!(r.normal_form(&f, &gb), f);
    }

    #[test]
    fn normal_form_one_step() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gb = r.buchberger(&[r.parse("x^2 + y").unwrap()], &Budget::default()).unwrap();
        let nf = r.normal_form(&r.parse("x^2").unwrap(), &gb);
        assert_eq!(nf, r.parse("-y").unwrap());
    }

    #[test]
    fn normal_form_chain() {
        // x^3*y modulo {x - y, y^2 - 1} under lex x>y reduces to 1
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gb = r
            .buchberger(
                &[r.parse("x - y").unwrap(), r.parse("y^2 - 1").unwrap()],
                &Budget::default(),
            )
            .unwrap();
        let nf = r.normal_form(&r.parse("x^3*y").unwrap(), &gb);
        assert_eq!(nf, r.one());
        // confluence: the trailing strategy agrees
        let nf2 = r.normal_form_with(
            &r.parse("x^3*y").unwrap(),
            gb.generators(),
            ReductionStrategy::TrailingLast,
        );
        assert_eq!(nf2, r.one());
    }

    #[test]
    fn lift_one_unit_ideal() {
        let r = ring(&["x"], MonomialOrder::Lex);
        let gens = vec![r.parse("x").unwrap(), r.parse("1 - x").unwrap()];
        let cs = r.lift_one_free(&gens, &Budget::default()).unwrap().unwrap();
        let mut acc = r.zero();
        for (c, g) in cs.iter().zip(&gens) {
            acc = r.add(&acc, &r.mul(c, g));
        }
        assert_eq!(acc, r.one());
        assert_eq!(cs, vec![r.one(), r.one()]);
    }

    #[test]
    fn lift_one_proper_ideal() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let gens = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        assert!(r.lift_one_free(&gens, &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn step_budget_reported() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GrevLex);
        let gens = vec![
            r.parse("x^2*y - z^3").unwrap(),
            r.parse("y^2*z - x^3").unwrap(),
            r.parse("z^2*x - y^3").unwrap(),
        ];
        let tiny = Budget { max_steps: 1, ..Budget::default() };
        assert_eq!(r.buchberger(&gens, &tiny), Err(BudgetExceeded::Steps(1)));
    }

    #[test]
    fn degree_budget_reported() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gens = vec![r.parse("x^9 - y").unwrap(), r.parse("x*y - 1").unwrap()];
        let tiny = Budget { max_degree: 3, ..Budget::default() };
        assert!(matches!(r.buchberger(&gens, &tiny), Err(BudgetExceeded::Degree(3))));
    }

    #[test]
    fn katsura_reduced_basis_is_canonical() {
        // same ideal presented two ways gives the same reduced basis
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let g1 = vec![r.parse("x^2 - y").unwrap(), r.parse("y^2 - 1").unwrap()];
        let g2 = vec![
            r.parse("x^2 - y").unwrap(),
            r.parse("y^2 - 1").unwrap(),
            r.parse("x^2*y - x^2 - y^2 + y").unwrap(),
        ];
        let b1 = r.buchberger(&g1, &Budget::default()).unwrap();
        let b2 = r.buchberger(&g2, &Budget::default()).unwrap();
        assert_eq!(b1, b2);
    }
}
