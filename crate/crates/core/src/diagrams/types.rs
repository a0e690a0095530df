use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Finite, reduced, irreducible Dynkin diagram types.
///
/// Node orderings (1-based, as used in every matrix and permutation):
///
/// ```text
/// A_n   1 - 2 - ... - n                       all multiplicities 1
///
/// B_n   1 - 2 - ... - (n-1) = n               n_i = 1 for i < n, n_n = 2
/// C_n   1 = 2 = ... = (n-1) - n               n_i = 2 for i < n, n_n = 1
///
///                           (n-1)
///                          /
/// D_n   1 - 2 - ... - (n-2)                   all multiplicities 1
///                          \
///                            n
///
///                 2
///                 |
/// E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]         all multiplicities 1
///
/// F_4   1 - 2 - 3 - 4                         multiplicities 1, 1, 2, 2
/// G_2   1 - 2                                 multiplicities 1, 3
/// ```
///
/// Multiplicities are the integers `n_i` labelling the nodes; the pairing is
/// `-2 n_i` on the diagonal and `max(n_i, n_j)` between adjacent nodes. With
/// these labels `C_n` is the quotient of `A_{2n}` (and of `A_{2n-1}`) by its
/// flip, `B_n` the quotient of `D_{n+1}`, `F_4` of `E_6` and `G_2` of `D_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DiagramType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let ty = match letter {
            'A' if rank >= 1 => DiagramType::A(rank),
            'B' if rank >= 2 => DiagramType::B(rank),
            'C' if rank >= 2 => DiagramType::C(rank),
            'D' if rank >= 4 => DiagramType::D(rank),
            'E' if (6..=8).contains(&rank) => DiagramType::E(rank),
            'F' if rank == 4 => DiagramType::F4,
            'G' if rank == 2 => DiagramType::G2,
            'A'..='G' => return Err(Error::InvalidRank { letter, rank }),
            _ => {
                return Err(Error::Syntax {
                    input: format!("{letter}{rank}"),
                    message: format!("unknown diagram type {letter:?}"),
                })
            }
        };
        Ok(ty)
    }

    pub fn letter(self) -> char {
        match self {
            DiagramType::A(_) => 'A',
            DiagramType::B(_) => 'B',
            DiagramType::C(_) => 'C',
            DiagramType::D(_) => 'D',
            DiagramType::E(_) => 'E',
            DiagramType::F4 => 'F',
            DiagramType::G2 => 'G',
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DiagramType::A(n)
            | DiagramType::B(n)
            | DiagramType::C(n)
            | DiagramType::D(n)
            | DiagramType::E(n) => n,
            DiagramType::F4 => 4,
            DiagramType::G2 => 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, DiagramType::A(_) | DiagramType::D(_) | DiagramType::E(_))
    }

    pub fn multiplicities(self) -> Vec<u32> {
        let n = self.rank();
        match self {
            DiagramType::A(_) | DiagramType::D(_) | DiagramType::E(_) => vec![1; n],
            DiagramType::B(_) => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            DiagramType::C(_) => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            DiagramType::F4 => vec![1, 1, 2, 2],
            DiagramType::G2 => vec![1, 3],
        }
    }

    /// Edges as 0-based node pairs `(i, j)` with `i < j`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self {
            DiagramType::A(_) | DiagramType::B(_) | DiagramType::C(_) => chain(n),
            DiagramType::F4 | DiagramType::G2 => chain(n),
            DiagramType::D(_) => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            DiagramType::E(_) => {
                // 1-3, 3-4, 4-5, ..., plus 2-4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e.sort_unstable();
                e
            }
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self {
            DiagramType::A(n) => fact(n + 1),
            DiagramType::B(n) | DiagramType::C(n) => (1u128 << n) * fact(n),
            DiagramType::D(n) => (1u128 << (n - 1)) * fact(n),
            DiagramType::E(6) => 51_840,
            DiagramType::E(7) => 2_903_040,
            DiagramType::E(_) => 696_729_600,
            DiagramType::F4 => 1_152,
            DiagramType::G2 => 12,
        }
    }

    /// Every type of the given rank, in the order `A, C, B, D, E, F, G`.
    /// `C` precedes `B` so that the rank-2 coincidence `B_2 = C_2` is
    /// reported as `C_2`.
    pub fn all_of_rank(rank: usize) -> Vec<DiagramType> {
        ['A', 'C', 'B', 'D', 'E', 'F', 'G']
            .into_iter()
            .filter_map(|l| DiagramType::new(l, rank).ok())
            .collect()
    }

    /// All simply-laced types with rank in `1..=max_rank`.
    pub fn ade_up_to(max_rank: usize) -> Vec<DiagramType> {
        let mut out: Vec<_> = (1..=max_rank).map(DiagramType::A).collect();
        out.extend((4..=max_rank).map(DiagramType::D));
        out.extend((6..=max_rank.min(8)).map(DiagramType::E));
        out
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = |message: &str| Error::Syntax {
            input: s.to_string(),
            message: message.to_string(),
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| syntax("empty diagram type"))?;
        if !letter.is_ascii_uppercase() {
            return Err(syntax("expected a type letter A-G"));
        }
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("expected a rank after the type letter"));
        }
        let rank: usize = digits.parse().map_err(|_| syntax("rank out of range"))?;
        DiagramType::new(letter, rank)
    }
}

/// One Dynkin diagram with its node multiplicities and edges (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    kind: DiagramType,
    multiplicities: Vec<u32>,
    edges: Vec<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn new(kind: DiagramType) -> Self {
        Self {
            kind,
            multiplicities: kind.multiplicities(),
            edges: kind.edges(),
        }
    }

    pub fn kind(&self) -> DiagramType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains(&key)
    }

    /// Intersection number of nodes `i` and `j`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        let (ni, nj) = (self.multiplicities[i] as i64, self.multiplicities[j] as i64);
        if i == j {
            -2 * ni
        } else if self.adjacent(i, j) {
            ni.max(nj)
        } else {
            0
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}
