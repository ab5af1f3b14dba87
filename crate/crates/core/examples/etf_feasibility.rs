//! Necessary conditions for real equiangular tight frames.

use packcert::etf::{coro1_classify, coro1_window, etf_report, etf_srg};
use packcert::report::Verdict;

fn main() -> packcert::Result<()> {
    for (d, n) in [(6, 16), (6, 18), (7, 28), (22, 176), (4, 7)] {
        let r = etf_report(d, n)?;
        println!("ETF({d}, {n}): {}", r.verdict);
        for c in &r.conditions {
            println!("    {:<16} {}", c.id, c.status);
        }
    }
    let p = etf_srg(6, 16)?;
    println!(
        "graph of ETF(6, 16): ({}, {}, {}, {})",
        p.v, p.k, p.lambda, p.mu
    );

    for d in [5, 7, 10, 13] {
        let (lo, hi) = coro1_window(d);
        let survivors: Vec<u64> = (d + 2..=d * (d + 1) / 2)
            .filter(|&n| {
                etf_report(d, n)
                    .map(|r| r.verdict == Verdict::Feasible)
                    .unwrap_or(false)
            })
            .collect();
        println!(
            "d = {d}: window [{lo}, {hi}], class of d(d+1)/2 = {}, surviving n = {survivors:?}",
            coro1_classify(d, d * (d + 1) / 2)?
        );
    }
    Ok(())
}
