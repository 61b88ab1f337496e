use awcenter::uqsl2::*;
use awcenter::coeffring::*;
fn main() {
    for d in [3u32, 4, 5, 6] {
        let t = std::time::Instant::now();
        let ok = concini_kac_check(d).unwrap();
        println!("d={d}: concini_kac={ok} ({:?})", t.elapsed());
    }
    // Examine d=4 by hand.
    let d = 4;
    let db = dbar(d);
    let lambda = lambda_casimir(d).unwrap();
    let t2 = lambda.mul(&lambda).sub(&UTensorElement::scalar(d, CycloScalar::from_int(d, 2)).unwrap());
    println!("T_2(Lambda) = {:?}", t2);
}
