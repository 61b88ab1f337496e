use awcenter::daha::*;
use awcenter::coeffring::*;
fn main() {
    let d = 3;
    let q = |e: i64| CycloScalar::q_pow(d, e);
    let t1 = DahaElement::t1(d);
    let [a, b, c, alpha, beta, gamma] = sharp_images(d);
    println!("[A,t1]=0: {}", a.commutator(&t1).is_zero());
    println!("[B,t1]=0: {}", b.commutator(&t1).is_zero());
    println!("[C,t1]=0: {}", c.commutator(&t1).is_zero());
    // Solve for the true alpha from the CB relation:
    // alpha_true = (q^2 BC + q(q^2-q^-2)A - CB) / (q(q-q^-1))
    let inv = q(1).mul_ref(&q(1).sub_ref(&q(-1))).checked_inv().unwrap();
    let alpha_true = b.mul(&c).scalar_mul(&q(2))
        .add(&a.scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .sub(&c.mul(&b))
        .scalar_mul(&inv);
    println!("alpha codes: {alpha:?}");
    println!("alpha true : {alpha_true:?}");
    let diff = alpha_true.sub(&alpha);
    println!("difference : {diff:?}");
    // Same for beta from CA relation: beta_true = (CA - q^-2 AC + q^-1(q^2-q^-2)B)/(q^-1(q-q^-1))
    let invb = q(-1).mul_ref(&q(1).sub_ref(&q(-1))).checked_inv().unwrap();
    let beta_true = c.mul(&a)
        .sub(&a.mul(&c).scalar_mul(&q(-2)))
        .add(&b.scalar_mul(&q(-1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .scalar_mul(&invb);
    println!("beta diff  : {:?}", beta_true.sub(&beta));
    let gamma_true = a.mul(&b).scalar_mul(&q(2))
        .add(&c.scalar_mul(&q(1).mul_ref(&q(2).sub_ref(&q(-2)))))
        .sub(&b.mul(&a))
        .scalar_mul(&inv);
    println!("gamma diff : {:?}", gamma_true.sub(&gamma));
}
