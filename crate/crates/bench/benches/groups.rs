use criterion::{criterion_group, criterion_main, Criterion};
use rootfold::{
    build_action, char_poly, enumerate_cocycles, generate_weyl, DiagramCollection, IntMatrix, NodePermutation,
    DEFAULT_MAX_ORDER,
};

fn weyl_generation(c: &mut Criterion) {
    for spec in ["D4", "A5", "D5"] {
        let coll = DiagramCollection::parse(spec).unwrap();
        c.bench_function(&format!("weyl {spec}"), |b| {
            b.iter(|| generate_weyl(&coll, DEFAULT_MAX_ORDER).unwrap().order())
        });
    }
}

fn cocycles(c: &mut Criterion) {
    let coll = DiagramCollection::parse("D4").unwrap();
    let w = generate_weyl(&coll, DEFAULT_MAX_ORDER).unwrap();
    for gens in [vec!["(1 3 4)"], vec!["(1 3 4)", "(3 4)"]] {
        let perms: Vec<_> = gens.iter().map(|g| NodePermutation::parse(g, 4).unwrap()).collect();
        let a = build_action(&w, &perms, 48).unwrap();
        c.bench_function(&format!("cocycles D4 {}", gens.join(" ")), |b| {
            b.iter(|| enumerate_cocycles(&a).unwrap().len())
        });
    }
}

fn characteristic_polynomial(c: &mut Criterion) {
    let gram = DiagramCollection::parse("E8").unwrap().gram_matrix();
    c.bench_function("char_poly E8 gram", |b| b.iter(|| char_poly(&gram).unwrap()));
    let m = IntMatrix::from_fn(12, 12, |i, j| ((i * 7 + j * 3) % 11) as i64 - 5);
    c.bench_function("char_poly 12x12", |b| b.iter(|| char_poly(&m).unwrap()));
}

criterion_group!(benches, weyl_generation, cocycles, characteristic_polynomial);
criterion_main!(benches);
