//! Hunt for a counterexample to the cooperative-painting question: does
//! every system of k matroids, each k-colorable, admit a winning strategy
//! for Ann in the painting game? Single-matroid systems are known Ann wins;
//! any Ben win on a mixed system would be news.
//!
//! Run with `cargo run --example conjecture_search`.

use coopcolor::corpus;
use coopcolor::games::{conjecture_search_parallel, ConjectureCatalog, PaintingRules};
use coopcolor::Error;

fn main() -> Result<(), Error> {
    for n in 2..=4usize {
        let pool: Vec<(String, coopcolor::Matroid)> = corpus::systems_pool(n)
            .into_iter()
            .map(|e| (e.name.to_string(), e.matroid))
            .collect();
        let names: Vec<&str> = pool.iter().map(|(n, _)| n.as_str()).collect();
        println!("ground size {n}: pool {names:?}");
        let catalog =
            ConjectureCatalog { pool, system_size: 2, rules: PaintingRules::NoDeadElement };
        let report = conjecture_search_parallel(&catalog, 4)?;
        println!(
            "  {} systems: solved {}, Ann wins {}, Ben wins {:?}, outside family {}",
            report.instances.len(),
            report.solved,
            report.ann_wins,
            report.ben_wins,
            report.filtered
        );
        assert!(report.ben_wins.is_empty(), "counterexample candidate found!");
        assert!(report.base_case_ben_wins.is_empty());
    }
    println!("no counterexample in the searched families");
    Ok(())
}
