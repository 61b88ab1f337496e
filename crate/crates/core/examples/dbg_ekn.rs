use awcenter::uqsl2::*;
use awcenter::coeffring::*;
fn main() {
    for d in [3u32, 4, 5] {
        let ek = UTensorElement::chevalley(d, UGen::E).unwrap()
            .mul(&UTensorElement::chevalley(d, UGen::K(-1)).unwrap());
        for n in 1..=3u32 {
            let lhs = ek.pow(n);
            // e^n k^{-n} reordered: e^n k^{-n} = q^{2n^2} k^{-n} e^n.
            let en_kn = UTensorElement::chevalley(d, UGen::E).unwrap().pow(n)
                .mul(&UTensorElement::chevalley(d, UGen::K(-1)).unwrap().pow(n));
            let rhs = en_kn.scalar_mul(&CycloScalar::q_pow(d, (n as i64)*(n as i64 -1)));
            println!("d={d} n={n}: lhs={:?} rhs(paper form)={:?} equal={}", lhs, rhs, lhs==rhs);
        }
    }
}
