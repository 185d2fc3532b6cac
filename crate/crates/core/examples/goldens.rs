use std::fs;

use parabolica::acceptance::{octahedron, render, tetrahedron};

fn main() -> parabolica::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/src/acceptance/golden");
    fs::write(format!("{dir}/tetrahedron.json"), render(&tetrahedron()?)).expect("write golden");
    fs::write(format!("{dir}/octahedron.json"), render(&octahedron()?)).expect("write golden");
    Ok(())
}
