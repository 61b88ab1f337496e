use awcenter::daha::*;
use rand::SeedableRng;
fn main() {
    let d = 3;
    // Degree-3 monomial scan.
    for l1 in 0..=1u8 { for i1 in -3..=3i64 { for j1 in -3..=3i64 {
        if i1.abs() + j1.abs() > 3 { continue; }
    for l2 in 0..=1u8 { for i2 in -3..=3i64 { for j2 in -3..=3i64 {
        if i2.abs() + j2.abs() > 3 { continue; }
        let x = DahaElement::monomial(d, (l1,i1,j1), awcenter::coeffring::MultiPoly::constant(kparam_registry(), awcenter::coeffring::CycloScalar::one(d)));
        let y = DahaElement::monomial(d, (l2,i2,j2), awcenter::coeffring::MultiPoly::constant(kparam_registry(), awcenter::coeffring::CycloScalar::one(d)));
        let t = std::time::Instant::now();
        let _p = x.mul(&y);
        let el = t.elapsed();
        if el.as_millis() > 500 {
            println!("SLOW ({el:?}): ({l1},{i1},{j1}) * ({l2},{i2},{j2})");
        }
    }}}}}}
    println!("monomial scan done");
    // Random triples, timed one by one.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for round in 0..60 {
        let x = random_element(d, &mut rng, 3);
        let y = random_element(d, &mut rng, 3);
        let z = random_element(d, &mut rng, 3);
        let t = std::time::Instant::now();
        let lhs = x.mul(&y).mul(&z);
        let rhs = x.mul(&y.mul(&z));
        let ok = lhs == rhs;
        let el = t.elapsed();
        if el.as_millis() > 500 || !ok {
            println!("round {round}: {el:?} ok={ok} | x={x:?}");
        }
    }
    println!("triples done");
}
