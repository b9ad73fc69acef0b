//! Reproduce the worked family Q_a = k[x,y]/(x^{a+1}, x*y^a) for a = 1..4:
//! invariants against their closed forms (c = a, g = 2a, n = 2a+1,
//! dim Γ = a^2), irreducibility of (y^a), the reducibility probe at 2a, and
//! the surjectivity index of the (y)-power system.
//!
//! Run with: cargo run -p soclebound --example family_sweep

use soclebound::config::EngineConfig;
use soclebound::probe::family_xy;
use soclebound::Result;

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let rows = family_xy(1, 4, 32003, 25, 7, &cfg)?;
    println!("a  c  g  n  dimΓ  (y^a) irred  probe@2a  index  stable  matches");
    for r in &rows {
        println!(
            "{}  {}  {}  {}  {:<4}  {:<11}  {:<8}  {:<5}  {:<6}  {}",
            r.a,
            r.c,
            r.g,
            r.bound_n,
            r.gamma_dim,
            r.ya_irreducible,
            if r.probe_all_reducible { "clean" } else { "HIT" },
            r.surjectivity_index.map(|i| i.to_string()).unwrap_or("-".into()),
            r.stable_socle_dim,
            r.matches_expected,
        );
    }
    Ok(())
}
