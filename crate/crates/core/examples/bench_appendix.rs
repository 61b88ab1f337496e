use awcenter::uqsl2::appendix::*;
fn main() {
    for d in [3u32, 4, 5, 7] {
        let t = std::time::Instant::now();
        let rep = appendix_verify(d).unwrap();
        let fails: Vec<_> = rep.failures().collect();
        let notes = rep.items.iter().filter(|i| i.pass && i.detail.is_some()).count();
        println!("d={d}: {:?}, items={}, failures={}, noted-discrepancies={}", t.elapsed(), rep.items.len(), fails.len(), notes);
        for f in fails.iter().take(4) { println!("   FAIL {}: {:?}", f.name, f.detail); }
    }
}
