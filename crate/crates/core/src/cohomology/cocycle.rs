use std::collections::VecDeque;

use crate::cohomology::GroupAction;
use crate::error::{Error, Result};
use crate::linalg::SmallMatrix;

/// A 1-cocycle `α: G → W`, `α(στ) = α(σ)·σ(α(τ))`, stored as Weyl element
/// indices indexed by the elements of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocycle {
    values: Vec<usize>,
}

impl Cocycle {
    /// Wraps raw values after checking the cocycle identity.
    pub fn new(a: &GroupAction<'_>, values: Vec<usize>) -> Result<Self> {
        check_cocycle(a, &values)?;
        Ok(Self { values })
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(values: Vec<usize>) -> Self {
        Self { values }
    }

    pub fn trivial(a: &GroupAction<'_>) -> Self {
        Self {
            values: vec![0; a.order()],
        }
    }

    /// Index in `W` of `α(σ)`.
    pub fn value(&self, sigma: usize) -> usize {
        self.values[sigma]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `α(σ)` as a matrix.
    pub fn matrix<'a>(&self, a: &'a GroupAction<'_>, sigma: usize) -> &'a SmallMatrix {
        a.weyl().group().element(self.values[sigma])
    }

    /// Values at the action's generators, the data that determines `α`.
    pub fn generator_values<'a>(&self, a: &'a GroupAction<'_>) -> Vec<&'a SmallMatrix> {
        a.generators().iter().map(|&g| self.matrix(a, g)).collect()
    }

    /// Ordering key: the matrices at the generators, then the full value list.
    pub(crate) fn sort_key<'a>(&self, a: &'a GroupAction<'_>) -> (Vec<&'a SmallMatrix>, Vec<usize>) {
        (self.generator_values(a), self.values.clone())
    }

    /// Twist by `b`: `σ ↦ b⁻¹ α(σ) σ(b)`.
    pub fn twist(&self, a: &GroupAction<'_>, b: usize) -> Result<Cocycle> {
        let group = a.weyl().group();
        let b_inv = group.inverse_index(b)?;
        let values = (0..a.order())
            .map(|sigma| {
                let left = group.mul_index(b_inv, self.values[sigma])?;
                group.mul_index(left, a.act(sigma, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Cocycle { values })
    }

    /// `ρ^α(σ) = α(σ) C_σ`.
    pub fn twisted_matrix(&self, a: &GroupAction<'_>, sigma: usize) -> Result<SmallMatrix> {
        self.matrix(a, sigma).mul(a.matrix(sigma))
    }
}

/// Checks `α(e) = 1` and `α(στ) = α(σ)·σ(α(τ))` for every pair.
pub fn check_cocycle(a: &GroupAction<'_>, values: &[usize]) -> Result<()> {
    let group = a.weyl().group();
    if values.len() != a.order() {
        return Err(Error::InvalidCocycle(format!(
            "{} values for a group of order {}",
            values.len(),
            a.order()
        )));
    }
    if let Some(&v) = values.iter().find(|&&v| v >= group.order()) {
        return Err(Error::InvalidCocycle(format!("value index {v} is not in W")));
    }
    if values[0] != 0 {
        return Err(Error::InvalidCocycle("α(e) is not the identity".into()));
    }
    for sigma in 0..a.order() {
        for tau in 0..a.order() {
            let rhs = group.mul_index(values[sigma], a.act(sigma, values[tau]))?;
            if values[a.mul(sigma, tau)] != rhs {
                return Err(Error::InvalidCocycle(format!(
                    "identity fails at ({}, {})",
                    a.elements()[sigma],
                    a.elements()[tau]
                )));
            }
        }
    }
    Ok(())
}

/// Extends values on the first `assigned.len()` generators over the subgroup
/// they generate, walking `σ → σ∘g` with `α(σ∘g) = α(σ)·σ(α(g))`.
/// Returns `None` at the first conflicting assignment.
fn propagate(a: &GroupAction<'_>, assigned: &[usize]) -> Result<Option<Vec<Option<usize>>>> {
    let group = a.weyl().group();
    let gens = &a.generators()[..assigned.len()];
    let mut values: Vec<Option<usize>> = vec![None; a.order()];
    values[0] = Some(0);
    // the identity permutation as a generator must carry the identity
    for (&g, &v) in gens.iter().zip(assigned) {
        if g == 0 && v != 0 {
            return Ok(None);
        }
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(sigma) = queue.pop_front() {
        let here = values[sigma].expect("queued elements are assigned");
        for (&g, &v) in gens.iter().zip(assigned) {
            let tau = a.mul(sigma, g);
            let candidate = group.mul_index(here, a.act(sigma, v))?;
            match values[tau] {
                Some(existing) if existing != candidate => return Ok(None),
                Some(_) => {}
                None => {
                    values[tau] = Some(candidate);
                    queue.push_back(tau);
                }
            }
        }
    }
    Ok(Some(values))
}

/// The cocycle with the given values at the action's generators, if one exists.
pub fn cocycle_from_generator_values(a: &GroupAction<'_>, values: &[SmallMatrix]) -> Result<Option<Cocycle>> {
    if values.len() != a.generators().len() {
        return Err(Error::Inconsistent(format!(
            "{} values for {} generators",
            values.len(),
            a.generators().len()
        )));
    }
    let group = a.weyl().group();
    let mut idx = Vec::with_capacity(values.len());
    for v in values {
        match group.index_of(v) {
            Some(i) => idx.push(i),
            None => return Ok(None),
        }
    }
    let Some(partial) = propagate(a, &idx)? else {
        return Ok(None);
    };
    let values: Vec<usize> = partial
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::Internal("generators do not reach every element".into())))
        .collect::<Result<_>>()?;
    Ok(check_cocycle(a, &values).ok().map(|_| Cocycle { values }))
}

/// Candidates for `α(g)`: every `w` with `(w C_g)^{ord g} = 1`.
fn generator_candidates(a: &GroupAction<'_>, g: usize) -> Result<Vec<usize>> {
    let m = a.element_order(g) as u64;
    let c = a.matrix(g);
    let mut out = Vec::new();
    for (i, w) in a.weyl().elements().iter().enumerate() {
        if w.mul(c)?.pow(m)?.is_identity() {
            out.push(i);
        }
    }
    Ok(out)
}

/// Cyclic scan for `G = ⟨σ⟩` of order `m`: one cocycle for each `w` with
/// `(w C_σ)^m = 1`, expanded by `α(σ^k) = α(σ)·σ(α(σ^{k-1}))`.
pub fn enumerate_cocycles_cyclic(a: &GroupAction<'_>) -> Result<Vec<Cocycle>> {
    let [sigma] = a.generators() else {
        return Err(Error::Inconsistent(format!(
            "cyclic scan needs exactly one generator, got {}",
            a.generators().len()
        )));
    };
    let sigma = *sigma;
    let group = a.weyl().group();
    let m = a.element_order(sigma);
    if m != a.order() {
        return Err(Error::Internal("single generator does not generate G".into()));
    }
    let mut out = Vec::new();
    for w in generator_candidates(a, sigma)? {
        let mut values = vec![0usize; a.order()];
        let mut power = 0usize; // σ^0
        let mut prev = 0usize; // α(σ^0)
        for _ in 1..m {
            power = a.mul(power, sigma);
            let next = group.mul_index(w, a.act(sigma, prev))?;
            values[power] = next;
            prev = next;
        }
        out.push(Cocycle { values });
    }
    sort_cocycles(a, &mut out);
    Ok(out)
}

/// Depth-first assignment of generator values, pruned as soon as the
/// partial assignment contradicts itself on the subgroup it generates.
pub fn enumerate_cocycles_general(a: &GroupAction<'_>) -> Result<Vec<Cocycle>> {
    let candidates = a
        .generators()
        .iter()
        .map(|&g| generator_candidates(a, g))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut assigned = Vec::with_capacity(candidates.len());
    search(a, &candidates, &mut assigned, &mut out)?;
    sort_cocycles(a, &mut out);
    Ok(out)
}

fn search(
    a: &GroupAction<'_>,
    candidates: &[Vec<usize>],
    assigned: &mut Vec<usize>,
    out: &mut Vec<Cocycle>,
) -> Result<()> {
    let k = assigned.len();
    if k == candidates.len() {
        let values = propagate(a, assigned)?
            .ok_or_else(|| Error::Internal("complete assignment lost consistency".into()))?;
        let values: Vec<usize> = values
            .into_iter()
            .map(|v| v.ok_or_else(|| Error::Internal("generators do not reach every element".into())))
            .collect::<Result<_>>()?;
        check_cocycle(a, &values).map_err(|e| Error::Internal(e.to_string()))?;
        out.push(Cocycle { values });
        return Ok(());
    }
    for &w in &candidates[k] {
        assigned.push(w);
        if propagate(a, assigned)?.is_some() {
            search(a, candidates, assigned, out)?;
        }
        assigned.pop();
    }
    Ok(())
}

fn sort_cocycles(a: &GroupAction<'_>, cocycles: &mut [Cocycle]) {
    cocycles.sort_by(|x, y| x.sort_key(a).cmp(&y.sort_key(a)));
}

/// All cocycles `G → W`, sorted by their values at the generators.
/// Single-generator actions use the cyclic scan.
pub fn enumerate_cocycles(a: &GroupAction<'_>) -> Result<Vec<Cocycle>> {
    if a.is_cyclic_presentation() {
        enumerate_cocycles_cyclic(a)
    } else {
        enumerate_cocycles_general(a)
    }
}
