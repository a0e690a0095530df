use crate::cohomology::cocycle::check_cocycle;
use crate::cohomology::{Cocycle, GroupAction};
use crate::error::{Error, Result};

/// Character of a lattice representation of `G`, indexed like `G`'s elements.
/// Traces of integer matrices, so the values are integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterTable {
    pub values: Vec<i64>,
}

impl CharacterTable {
    /// Character of the untwisted lattice: `σ ↦ trace(C_σ)`.
    pub fn untwisted(a: &GroupAction<'_>) -> Self {
        Self {
            values: (0..a.order()).map(|s| a.matrix(s).trace()).collect(),
        }
    }

    pub fn value(&self, sigma: usize) -> i64 {
        self.values[sigma]
    }

    /// Constant on conjugacy classes of `G`.
    pub fn is_class_function(&self, a: &GroupAction<'_>) -> bool {
        (0..a.order()).all(|s| {
            (0..a.order()).all(|t| self.values[a.mul(a.mul(t, s), a.inverse(t))] == self.values[s])
        })
    }
}

/// Character of the twisted lattice `Λ^α`: `σ ↦ trace(α(σ) C_σ)`.
pub fn twist_character(a: &GroupAction<'_>, alpha: &Cocycle) -> Result<CharacterTable> {
    check_cocycle(a, alpha.values())?;
    let values = (0..a.order())
        .map(|s| alpha.twisted_matrix(a, s).map(|m| m.trace()))
        .collect::<Result<Vec<_>>>()?;
    let table = CharacterTable { values };
    if !table.is_class_function(a) {
        return Err(Error::Internal("twisted character is not a class function".into()));
    }
    Ok(table)
}

/// Whether `α` dies in `H¹(G, GL(Λ ⊗ ℚ))`, i.e. `Λ^α ≅ Λ` rationally. In
/// characteristic zero representations are determined by their characters.
pub fn is_trivial_in_gl(a: &GroupAction<'_>, alpha: &Cocycle) -> Result<bool> {
    Ok(twist_character(a, alpha)? == CharacterTable::untwisted(a))
}
