use awcenter::uqsl2::*;
fn main() {
    for d in [3u32, 4, 5, 6] {
        let rep = power_formulas_check(d).unwrap();
        for item in &rep.items {
            if !item.pass {
                println!("d={d} FAIL {}: {:?}", item.name, item.detail);
            }
        }
        println!("d={d}: pass={}", rep.all_pass());
    }
}
