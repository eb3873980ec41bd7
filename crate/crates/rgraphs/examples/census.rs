//! Census of small r-graphs: enumerate connected r-regular multigraphs up to
//! an order and multiplicity bound, keep the r-graphs, and tabulate class-1
//! status and (2,r)-PM existence.

use rgraphs::census::run_census;

fn main() {
    for (r, max_n, max_mu) in [(3, 6, 3), (4, 6, 2), (2, 8, 1)] {
        let report = run_census(r, max_n, max_mu, None).unwrap();
        println!(
            "r = {r}, n <= {max_n}, mu <= {max_mu}: {} regular classes, {} r-graphs",
            report.regular_count,
            report.entries.len()
        );
        for e in &report.entries {
            println!(
                "  n = {}, class {}, (2,{r})-PM: {}, hash {}",
                e.n,
                if e.class1 { "1" } else { "2" },
                e.tr2_pm,
                &e.hash[..12]
            );
        }
    }
}
