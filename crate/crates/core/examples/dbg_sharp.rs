use awcenter::daha::*;
use awcenter::coeffring::*;
fn main() {
    let d = 3;
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let [a, b, c, alpha, _beta, _gamma] = sharp_images(d);
    let r1 = c
        .mul(&b)
        .sub(&b.mul(&c).scalar_mul(&q(2)))
        .sub(&a.scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .add(&alpha.scalar_mul(&q(1).mul_ref(&q(1).sub_ref(&q(-1)))));
    println!("CB residual: {r1:?}");
    let r2 = c
        .mul(&a)
        .sub(&a.mul(&c).scalar_mul(&q(-2)));
    println!("CA-q^-2AC (should be -q^-1(q^2-q^-2))B + q^-1(q-q^-1)beta... : {r2:?}");
}
