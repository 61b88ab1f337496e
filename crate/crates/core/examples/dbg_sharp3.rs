use awcenter::daha::*;
use awcenter::coeffring::*;
fn main() {
    let d = 3;
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let [a, b, c, _alpha, _beta, _gamma] = sharp_images(d);
    // Hypothesis: the images satisfy the relations with products reversed,
    // i.e. B C = q^2 C B + q(q^2-q^{-2}) A - q(q-q^{-1}) alpha'.
    let inv = q(1).mul_ref(&q(1).sub_ref(&q(-1))).checked_inv().unwrap();
    let alpha_rev = c.mul(&b).scalar_mul(&q(2))
        .add(&a.scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .sub(&b.mul(&c))
        .scalar_mul(&inv);
    println!("alpha_rev: {alpha_rev:?}");
    let invb = q(-1).mul_ref(&q(1).sub_ref(&q(-1))).checked_inv().unwrap();
    let beta_rev = a.mul(&c)
        .sub(&c.mul(&a).scalar_mul(&q(-2)))
        .add(&b.scalar_mul(&q(-1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .scalar_mul(&invb);
    println!("beta_rev: {beta_rev:?}");
    let gamma_rev = b.mul(&a).scalar_mul(&q(2))
        .add(&c.scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .sub(&a.mul(&b))
        .scalar_mul(&inv);
    println!("gamma_rev: {gamma_rev:?}");
}
