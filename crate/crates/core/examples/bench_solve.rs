use awcenter::chebyshev::*;
fn main() {
    for n in [4u32, 5, 6, 8, 9] {
        let t = std::time::Instant::now();
        let (p, s) = solve_capital(n).unwrap();
        println!("solve_capital({n}): {:?} (Phi terms {}, Psi terms {})", t.elapsed(), p.num_terms(), s.num_terms());
    }
    let t = std::time::Instant::now();
    let out = composition_check(3, 3, true).unwrap();
    println!("composition_check(3,3,capital): {:?} ok={}", t.elapsed(), out.all_ok());
    let t = std::time::Instant::now();
    let out = composition_check(4, 4, false).unwrap();
    println!("composition_check(4,4): {:?} ok={}", t.elapsed(), out.all_ok());
}
