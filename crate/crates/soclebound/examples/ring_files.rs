//! The ring file format and the element grammar: parse a JSON ring
//! description, emit it canonically, and parse command-line style elements
//! against it.
//!
//! Run with: cargo run -p soclebound --example ring_files

use soclebound::ringfile::{emit_ring_file, parse_element_list, parse_ring_file};
use soclebound::{RingModel, Result};

fn main() -> Result<()> {
    let text = r#"{
        "vars": ["x", "y"],
        "char": 32003,
        "ideal": ["x^3", "x*y^2", "x^3*y"]
    }"#;
    let spec = parse_ring_file(text)?;
    let model = RingModel::new(spec.clone())?;
    println!("parsed: {}", model.signature());
    println!("note: x^3*y was dropped by minimalization (x^3 divides it)");
    println!();
    println!("canonical emission:\n{}", emit_ring_file(&spec));
    println!();
    let elements = parse_element_list("y^2, x + 2*y, x^2 - y^2", spec.vars())?;
    println!("parsed {} elements from \"y^2, x + 2*y, x^2 - y^2\":", elements.len());
    for terms in &elements {
        let shown: Vec<String> = terms
            .iter()
            .map(|(m, c)| format!("{}·{}", c, m.display(spec.vars())))
            .collect();
        println!("  [{}]", shown.join(", "));
    }
    Ok(())
}
