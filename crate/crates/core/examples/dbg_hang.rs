use awcenter::daha::*;
fn main() {
    let d = 3;
    for l1 in 0..=1u8 { for i1 in -2..=2i64 { for j1 in -2..=2i64 {
    for l2 in 0..=1u8 { for i2 in -2..=2i64 { for j2 in -2..=2i64 {
        let x = DahaElement::monomial(d, (l1,i1,j1), awcenter::coeffring::MultiPoly::constant(kparam_registry(), awcenter::coeffring::CycloScalar::one(d)));
        let y = DahaElement::monomial(d, (l2,i2,j2), awcenter::coeffring::MultiPoly::constant(kparam_registry(), awcenter::coeffring::CycloScalar::one(d)));
        let t = std::time::Instant::now();
        let p = x.mul(&y);
        let el = t.elapsed();
        if el.as_millis() > 300 {
            println!("SLOW ({el:?}): ({l1},{i1},{j1}) * ({l2},{i2},{j2}) -> {} terms", p.num_terms());
        }
    }}}}}}
    println!("done");
}
