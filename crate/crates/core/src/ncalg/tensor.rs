use super::{GenId, Generator, NCPoly, NcError, Overlap, RewriteSystem, Word};
use crate::field::FieldElem;

/// How a right-factor generator moves past a left-factor generator.
pub enum CrossRules<'a> {
    /// `r·l -> l·r` for every pair.
    Commuting,
    /// `r·l -> f(r, l, left_map, right_map)`, with `r`, `l` the local ids in
    /// their own systems and the maps translating local ids to combined ids.
    Custom(&'a dyn Fn(GenId, GenId, &[GenId], &[GenId]) -> NCPoly),
}

/// Combined system of `left ⊗ right`. Right generators rank above all left
/// generators, so normal words are a left word followed by a right word.
#[derive(Debug, Clone)]
pub struct TensorAlgebra {
    pub system: RewriteSystem,
    pub left: Vec<GenId>,
    pub right: Vec<GenId>,
    /// Unresolved overlaps of the combined system; empty when confluent.
    pub overlaps: Vec<Overlap>,
}

pub fn tensor_algebra(
    left: &RewriteSystem,
    right: &RewriteSystem,
    cross: CrossRules<'_>,
) -> Result<TensorAlgebra, NcError> {
    for g in right.generators() {
        if left.id(&g.name).is_ok() {
            return Err(NcError::NameClash(g.name.clone()));
        }
    }
    let offset = left.generators().iter().map(|g| g.rank).max().unwrap_or(0);
    let nl = left.num_generators();
    let mut gens: Vec<Generator> = left.generators().to_vec();
    gens.extend(right.generators().iter().map(|g| Generator {
        rank: g.rank + offset + 1,
        ..g.clone()
    }));
    let mut sys = RewriteSystem::new(gens)?.with_step_budget(left.step_budget.max(right.step_budget));
    let lmap: Vec<GenId> = (0..nl as GenId).collect();
    let rmap: Vec<GenId> = (0..right.num_generators() as GenId).map(|i| i + nl as GenId).collect();
    let remap = |p: &NCPoly, m: &[GenId]| -> NCPoly {
        NCPoly::from_terms(
            p.terms()
                .map(|(w, c)| (c.clone(), w.iter().map(|&g| m[g as usize]).collect())),
        )
    };
    for (&(g, h), rhs) in left.rules() {
        sys.add_rule(lmap[g as usize], lmap[h as usize], rhs.clone())?;
    }
    for (&(g, h), rhs) in right.rules() {
        sys.add_rule(rmap[g as usize], rmap[h as usize], remap(rhs, &rmap))?;
    }
    for r in 0..right.num_generators() as GenId {
        for l in 0..nl as GenId {
            let rhs = match &cross {
                CrossRules::Commuting => NCPoly::term(FieldElem::one(), vec![lmap[l as usize], rmap[r as usize]]),
                CrossRules::Custom(f) => f(r, l, &lmap, &rmap),
            };
            sys.add_rule(rmap[r as usize], lmap[l as usize], rhs)?;
        }
    }
    let overlaps = sys.check_confluence()?;
    Ok(TensorAlgebra {
        system: sys,
        left: lmap,
        right: rmap,
        overlaps,
    })
}

impl TensorAlgebra {
    pub fn is_confluent(&self) -> bool {
        self.overlaps.is_empty()
    }

    pub fn embed_left(&self, p: &NCPoly) -> NCPoly {
        self.embed(p, &self.left)
    }

    pub fn embed_right(&self, p: &NCPoly) -> NCPoly {
        self.embed(p, &self.right)
    }

    fn embed(&self, p: &NCPoly, m: &[GenId]) -> NCPoly {
        NCPoly::from_terms(
            p.terms()
                .map(|(w, c)| (c.clone(), w.iter().map(|&g| m[g as usize]).collect())),
        )
    }

    /// `u ⊗ v` as the product `embed_left(u)·embed_right(v)`.
    pub fn pure_tensor(&self, u: &NCPoly, v: &NCPoly) -> NCPoly {
        self.embed_left(u).mul(&self.embed_right(v))
    }

    /// Splits a normal-form element into `(left word, right word, coeff)`
    /// with local ids. Panics if a word interleaves the factors.
    pub fn split(&self, p: &NCPoly) -> Vec<(Word, Word, FieldElem)> {
        let nl = self.left.len() as GenId;
        p.terms()
            .map(|(w, c)| {
                let cut = w.iter().position(|&g| g >= nl).unwrap_or(w.len());
                assert!(w[cut..].iter().all(|&g| g >= nl), "word is not in tensor normal form");
                (w[..cut].to_vec(), w[cut..].iter().map(|&g| g - nl).collect(), c.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::tests::oscillator;

    #[test]
    fn unit_algebra_tensor_is_left() {
        let osc = oscillator();
        let unit = RewriteSystem::new(Vec::new()).unwrap();
        let t = tensor_algebra(&osc, &unit, CrossRules::Commuting).unwrap();
        assert!(t.is_confluent());
        assert_eq!(t.system.num_generators(), 3);
        assert_eq!(t.system.num_rules(), osc.num_rules());
    }

    #[test]
    fn commuting_square_of_oscillator_is_confluent() {
        let osc = oscillator();
        let r = osc.renamed("'", 0);
        let t = tensor_algebra(&osc, &r, CrossRules::Commuting).unwrap();
        assert!(t.is_confluent());
        let p = t.pure_tensor(&osc.g("a"), &osc.g("a*"));
        let nf = t
            .system
            .normal_form(&t.embed_right(&osc.g("a*")).mul(&t.embed_left(&osc.g("a"))))
            .unwrap();
        assert_eq!(nf, p);
    }

    #[test]
    fn name_clash_rejected() {
        let osc = oscillator();
        assert!(matches!(
            tensor_algebra(&osc, &osc, CrossRules::Commuting),
            Err(NcError::NameClash(_))
        ));
    }
}
