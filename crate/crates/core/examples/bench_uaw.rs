use awcenter::uaw::*;
fn main() {
    for d in [4u32, 6, 5, 10] {
        let t = std::time::Instant::now();
        let rep = central_relation_check(d).unwrap();
        println!("central_relation d={d}: {:?} pass={}", t.elapsed(), rep.all_pass());
    }
    for d in [5u32, 6, 7] {
        let t = std::time::Instant::now();
        let rep = centrality_suite(d);
        println!("centrality_suite d={d}: {:?} pass={}", t.elapsed(), rep.all_pass());
    }
}
