//! Certify one gap inequality and print the machine-checkable certificate.
//!
//! Usage: cargo run --release --example certify_pair -- [ell] [d]

use spheregap::{certify_improved, Dimension};

fn main() {
    let mut args = std::env::args().skip(1);
    let ell: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let d: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);

    let dim = Dimension::new(d).expect("dimension must be ≥ 2");
    let cert = certify_improved(ell, dim).expect("certification runs");
    println!(
        "ell = {ell}, d = {d}: verdict {}, {} isolated roots, {} interior samples",
        cert.verdict,
        cert.interior_root_count,
        cert.sample_points.len()
    );
    cert.revalidate().expect("certificate re-validates");
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
}
