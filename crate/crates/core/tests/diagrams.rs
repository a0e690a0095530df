use num_rational::BigRational;
use rootfold::{
    diagram_automorphisms, dynkaut_integrality, fold, mat_inverse, DiagramCollection, DiagramType, DynkinDiagram,
    NodePermutation,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn every_gram_is_negative_definite_and_symmetric() {
    for rank in 1..=8 {
        for kind in DiagramType::all_of_rank(rank) {
            let g = DiagramCollection::single(kind).gram_matrix();
            assert!(g.is_symmetric(), "{kind}");
            assert!(g.is_negative_definite().unwrap(), "{kind}");
        }
    }
}

#[test]
fn a_n_inverse_matches_closed_form() {
    // -(A^{-1})_{ij} = min(i,j)(n+1-max(i,j))/(n+1), 1-based
    for n in 1..=8 {
        let inv = mat_inverse(&DiagramCollection::parse(&format!("A{n}")).unwrap().gram_matrix()).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let expected = q(-((i.min(j) * (n + 1 - i.max(j))) as i64), n as i64 + 1);
                assert_eq!(inv.get(i - 1, j - 1), &expected, "A{n} ({i},{j})");
            }
        }
        let n = n as i64;
        assert_eq!(inv.get(n as usize - 1, 0), &q(-1, n + 1));
        assert_eq!(inv.get(0, 0), &q(-n, n + 1));
    }
}

#[test]
fn nontrivial_automorphisms_are_never_integral() {
    let mut pairs = 0;
    for kind in DiagramType::ade_up_to(8) {
        let d = DynkinDiagram::new(kind);
        for p in diagram_automorphisms(&DiagramCollection::single(kind)) {
            let r = dynkaut_integrality(&d, &p).unwrap();
            assert_eq!(r.all_integral, p.is_identity(), "{kind} {p}");
            pairs += !p.is_identity() as usize;
        }
    }
    // A2..A8 flips, D4 (5 elements), D5..D8 flips, E6 flip
    assert_eq!(pairs, 7 + 5 + 4 + 1);
}

#[test]
fn d_n_flip_has_half_in_the_last_diagonal_entry() {
    for n in 4..=8 {
        let d = DynkinDiagram::new(DiagramType::D(n));
        let p = NodePermutation::parse(&format!("({} {})", n - 1, n), n).unwrap();
        let r = dynkaut_integrality(&d, &p).unwrap();
        assert_eq!(r.entry(n - 1, n - 1), &q(1, 2), "D{n}");
        assert_eq!(r.witness.as_ref().unwrap().2, q(1, 2));
    }
}

#[test]
fn quotient_types() {
    let cases = [
        ("A3", "(1 3)", "C2"),
        ("A4", "(1 4)(2 3)", "C2"),
        ("A5", "(1 5)(2 4)", "C3"),
        ("A6", "(1 6)(2 5)(3 4)", "C3"),
        ("D4", "(1 3 4)", "G2"),
        ("D4", "(3 4)", "B3"),
        ("D5", "(4 5)", "B4"),
        ("E6", "(1 6)(3 5)", "F4"),
        ("A1+A1", "(1 2)", "A1(x2)"),
    ];
    for (spec, gen, expected) in cases {
        let c = DiagramCollection::parse(spec).unwrap();
        let sub = c
            .generate_subgroup(&[NodePermutation::parse(gen, c.rank()).unwrap()], 48)
            .unwrap();
        let f = fold(&c, &sub).unwrap();
        assert_eq!(f.classified_type.unwrap().to_string(), expected, "{spec} {gen}");
    }
}
