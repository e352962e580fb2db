use std::time::Instant;
fn main() {
    for name in ["2s_le_c", "j_le_rho_le_2j", "sh2_le_c"] {
        let t0 = Instant::now();
        let r = ballmetrics::analysis::verify_inequality(name, 2, 100_000, 1, None).unwrap();
        println!("{name}: violations={}, {:?}", r.violations, t0.elapsed());
    }
    let t0 = Instant::now();
    let r = ballmetrics::analysis::verify_inequality("2s_le_c", 3, 10_000, 1, None).unwrap();
    println!("2s_le_c B3: violations={}, {:?}", r.violations, t0.elapsed());
}
