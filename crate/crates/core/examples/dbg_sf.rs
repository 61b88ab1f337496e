use awcenter::uqsl2::*;
use awcenter::uaw;
use rand::SeedableRng;
fn main() {
    let d = 3;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for round in 0..10 {
        let x = uaw::random_element_bounded(d, &mut rng, 1, 1);
        let y = uaw::random_element_bounded(d, &mut rng, 1, 1);
        let t = std::time::Instant::now();
        let xy = x.mul(&y);
        let t_mul = t.elapsed();
        let t = std::time::Instant::now();
        let exy = natural_embed(&xy, d).unwrap();
        let t_exy = t.elapsed();
        let t = std::time::Instant::now();
        let ex = natural_embed(&x, d).unwrap();
        let ey = natural_embed(&y, d).unwrap();
        let prod = ex.mul(&ey);
        let t_rest = t.elapsed();
        println!("round {round}: mul {:?}, embed(xy) {:?} ({} terms), embed+mul {:?}, equal={}",
            t_mul, t_exy, exy.num_terms(), t_rest, prod == exy);
    }
}
