use awcenter::daha::*;
use awcenter::coeffring::*;
fn main() {
    let d = 3;
    let mono = |l: u8, i: i64, j: i64| DahaElement::monomial(d, (l,i,j), MultiPoly::constant(kparam_registry(), CycloScalar::one(d)));
    let mut count = 0;
    'outer:
    for l1 in 0..=1u8 { for i1 in -1..=1i64 { for j1 in -1..=1i64 {
    for l2 in 0..=1u8 { for i2 in -1..=1i64 { for j2 in -1..=1i64 {
    for l3 in 0..=1u8 { for i3 in -1..=1i64 { for j3 in -1..=1i64 {
        let x = mono(l1,i1,j1); let y = mono(l2,i2,j2); let z = mono(l3,i3,j3);
        let lhs = x.mul(&y).mul(&z);
        let rhs = x.mul(&y.mul(&z));
        if lhs != rhs {
            println!("FAIL: ({l1},{i1},{j1})*({l2},{i2},{j2})*({l3},{i3},{j3})");
            count += 1;
            if count > 12 { break 'outer; }
        }
    }}}}}}}}}
    println!("count={count}");
}
