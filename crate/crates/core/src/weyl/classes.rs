use num_rational::BigRational;

use crate::error::Result;
use crate::linalg::SmallMatrix;
use crate::weyl::MatrixGroup;

/// A conjugacy class of elements of order 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionClass {
    /// Lexicographically smallest member.
    pub representative: SmallMatrix,
    pub class_size: usize,
    /// Multiplicity of `-1` as an eigenvalue, shared by all members.
    pub minus_one_multiplicity: usize,
}

/// Multiplicity of `-1` in the characteristic polynomial of `m`.
pub fn minus_one_multiplicity(m: &SmallMatrix) -> Result<usize> {
    let p = m.to_int_matrix().char_poly()?;
    p.root_multiplicity(&BigRational::from_integer((-1).into()))
}

/// All conjugacy classes of involutions, sorted by
/// `(minus_one_multiplicity, class_size, representative)`.
pub fn involution_classes(group: &MatrixGroup) -> Result<Vec<InvolutionClass>> {
    let mut assigned = vec![false; group.order()];
    let mut out = Vec::new();
    for (i, x) in group.elements().iter().enumerate() {
        if assigned[i] || x.is_identity() || !x.mul(x)?.is_identity() {
            continue;
        }
        let class = group.conjugacy_class(i)?;
        for &j in &class {
            assigned[j] = true;
        }
        let representative = class
            .iter()
            .map(|&j| group.element(j))
            .min()
            .expect("class is non-empty")
            .clone();
        out.push(InvolutionClass {
            minus_one_multiplicity: minus_one_multiplicity(&representative)?,
            class_size: class.len(),
            representative,
        });
    }
    out.sort_by(|a, b| {
        (a.minus_one_multiplicity, a.class_size, &a.representative).cmp(&(
            b.minus_one_multiplicity,
            b.class_size,
            &b.representative,
        ))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::DiagramCollection;
    use crate::weyl::{generate_weyl, DEFAULT_MAX_ORDER};

    fn classes(spec: &str) -> Vec<InvolutionClass> {
        let w = generate_weyl(&DiagramCollection::parse(spec).unwrap(), DEFAULT_MAX_ORDER).unwrap();
        involution_classes(w.group()).unwrap()
    }

    #[test]
    fn a1_single_class() {
        let c = classes("A1");
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].class_size, 1);
        assert_eq!(c[0].minus_one_multiplicity, 1);
        assert_eq!(c[0].representative.to_rows(), vec![vec![-1]]);
    }

    #[test]
    fn a3_transpositions_and_double_transpositions() {
        let c = classes("A3");
        let summary: Vec<_> = c.iter().map(|k| (k.minus_one_multiplicity, k.class_size)).collect();
        assert_eq!(summary, vec![(1, 6), (2, 3)]);
    }

    #[test]
    fn trace_agrees_with_char_poly() {
        // for an involution on a rank-n lattice, mult(-1) = (n - tr) / 2
        for k in classes("D5") {
            let n = k.representative.dim() as i64;
            let tr = k.representative.trace();
            assert_eq!(k.minus_one_multiplicity as i64, (n - tr) / 2);
        }
    }
}
