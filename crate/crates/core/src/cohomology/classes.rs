use std::collections::HashMap;

use crate::cohomology::{Cocycle, GroupAction};
use crate::error::{Error, Result};

/// `H¹(G, W)`: cocycles up to twisting `σ ↦ b⁻¹ α(σ) σ(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClassSet {
    /// One cocycle per class. The trivial class comes first and is
    /// represented by the trivial cocycle; every other class by its smallest
    /// member (values at the generators compared in order).
    pub representatives: Vec<Cocycle>,
    pub orbit_sizes: Vec<usize>,
    /// Class index of each input cocycle, in input order.
    pub class_of: Vec<usize>,
}

impl CohomologyClassSet {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn trivial_class(&self) -> usize {
        0
    }
}

/// Partitions a complete cocycle list into twisting orbits. Orbits are
/// closed under the basic reflections `s` of `W`, using
/// `α^s(σ) = s·α(σ)·σ(s)`. Fails if an orbit leaves the list.
pub fn h1_classes(a: &GroupAction<'_>, cocycles: &[Cocycle]) -> Result<CohomologyClassSet> {
    let group = a.weyl().group();
    let reflections = group
        .generators()
        .iter()
        .map(|s| group.locate(s))
        .collect::<Result<Vec<_>>>()?;
    let mut position: HashMap<&[usize], usize> = HashMap::with_capacity(cocycles.len());
    for (i, c) in cocycles.iter().enumerate() {
        if c.values().len() != a.order() {
            return Err(Error::InvalidCocycle(format!("cocycle {i} has the wrong length")));
        }
        if position.insert(c.values(), i).is_some() {
            return Err(Error::Inconsistent(format!("cocycle {i} is listed twice")));
        }
    }

    let mut order: Vec<usize> = (0..cocycles.len()).collect();
    order.sort_by(|&x, &y| cocycles[x].sort_key(a).cmp(&cocycles[y].sort_key(a)));
    if let Some(t) = cocycles.iter().position(Cocycle::is_trivial) {
        order.retain(|&i| i != t);
        order.insert(0, t);
    } else if !cocycles.is_empty() {
        return Err(Error::Inconsistent("the trivial cocycle is missing".into()));
    }

    const UNSEEN: usize = usize::MAX;
    let mut class_of = vec![UNSEEN; cocycles.len()];
    let mut representatives = Vec::new();
    let mut orbit_sizes = Vec::new();
    for &start in &order {
        if class_of[start] != UNSEEN {
            continue;
        }
        let k = representatives.len();
        class_of[start] = k;
        let mut stack = vec![start];
        let mut size = 0;
        let mut next = vec![0usize; a.order()];
        while let Some(i) = stack.pop() {
            size += 1;
            let alpha = cocycles[i].values();
            for &s in &reflections {
                for (sigma, v) in next.iter_mut().enumerate() {
                    *v = group.mul_index(group.mul_index(s, alpha[sigma])?, a.act(sigma, s))?;
                }
                let j = *position.get(next.as_slice()).ok_or_else(|| {
                    Error::Inconsistent("cocycle list is not closed under twisting".into())
                })?;
                if class_of[j] == UNSEEN {
                    class_of[j] = k;
                    stack.push(j);
                }
            }
        }
        representatives.push(cocycles[start].clone());
        orbit_sizes.push(size);
    }
    Ok(CohomologyClassSet {
        representatives,
        orbit_sizes,
        class_of,
    })
}

/// Whether two cocycles are cohomologous, by direct search over `b ∈ W`.
pub fn are_cohomologous(a: &GroupAction<'_>, x: &Cocycle, y: &Cocycle) -> Result<bool> {
    for b in 0..a.weyl().order() {
        if x.twist(a, b)? == *y {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{build_action, enumerate_cocycles};
    use crate::diagrams::{DiagramCollection, NodePermutation};
    use crate::weyl::{generate_weyl, WeylGroup, DEFAULT_MAX_ORDER};

    fn weyl(spec: &str) -> WeylGroup {
        generate_weyl(&DiagramCollection::parse(spec).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    fn classes(w: &WeylGroup, gens: &[&str]) -> (Vec<Cocycle>, CohomologyClassSet) {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| NodePermutation::parse(g, w.rank()).unwrap())
            .collect();
        let a = build_action(w, &gens, 48).unwrap();
        let cs = enumerate_cocycles(&a).unwrap();
        let h = h1_classes(&a, &cs).unwrap();
        (cs, h)
    }

    #[test]
    fn d4_rotation_has_two_classes() {
        let w = weyl("D4");
        let (cs, h) = classes(&w, &["(1 3 4)"]);
        assert_eq!(h.class_count(), 2);
        assert!(h.representatives[0].is_trivial());
        assert_eq!(h.orbit_sizes.iter().sum::<usize>(), cs.len());
    }

    #[test]
    fn trivial_group_one_class() {
        let w = weyl("A2");
        let (_, h) = classes(&w, &["()"]);
        assert_eq!(h.class_count(), 1);
        assert_eq!(h.orbit_sizes, vec![1]);
    }

    #[test]
    fn incomplete_list_is_rejected() {
        let w = weyl("D4");
        let gens = [NodePermutation::parse("(1 3 4)", 4).unwrap()];
        let a = build_action(&w, &gens, 48).unwrap();
        let cs = enumerate_cocycles(&a).unwrap();
        assert!(h1_classes(&a, &cs[..cs.len() - 1]).is_err());
    }

    #[test]
    fn orbit_membership_matches_direct_search() {
        let w = weyl("A3");
        let gens = [NodePermutation::parse("(1 3)", 3).unwrap()];
        let a = build_action(&w, &gens, 48).unwrap();
        let cs = enumerate_cocycles(&a).unwrap();
        let h = h1_classes(&a, &cs).unwrap();
        for (i, c) in cs.iter().enumerate() {
            let rep = &h.representatives[h.class_of[i]];
            assert!(are_cohomologous(&a, rep, c).unwrap());
        }
        for x in 0..h.class_count() {
            for y in x + 1..h.class_count() {
                assert!(!are_cohomologous(&a, &h.representatives[x], &h.representatives[y]).unwrap());
            }
        }
    }
}
