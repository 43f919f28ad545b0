//! Writes a representation archive, reads it back and verifies the stored matrices.

use o2n::interface::RepArchive;
use o2n::operators::{BuildOptions, Representation, StructureConstants};
use o2n::patterns::HighestWeight;
use o2n::verify::{self, Suite};

fn main() {
    let hw = HighestWeight::parse(3, "0,0,-1").expect("dominant");
    let one = Representation::build_with(&hw, BuildOptions { jobs: 1, ..Default::default() }).expect("construction");
    let many = Representation::build_with(&hw, BuildOptions { jobs: 4, ..Default::default() }).expect("construction");
    let text = RepArchive::from_representation(&one).to_json();
    println!(
        "archive: {} bytes, identical across job counts: {}",
        text.len(),
        text == RepArchive::from_representation(&many).to_json()
    );

    let path = std::env::temp_dir().join("o2n-archive-roundtrip.json");
    RepArchive::from_representation(&one).write(&path).expect("write");
    let back = RepArchive::read(&path).expect("read").to_representation().expect("consistent");
    let sc = StructureConstants::new(back.n()).expect("structure constants");
    let reports: Vec<_> = Suite::ALL.iter().map(|&s| verify::run(s, &back, &sc)).collect();
    for rep in &reports {
        println!("{:<15} {}", rep.suite, if rep.pass { "pass" } else { "FAIL" });
    }
    let with_reports = RepArchive::from_representation(&back).with_reports(reports);
    println!(
        "reports stored: {}",
        RepArchive::from_json(&with_reports.to_json()).expect("parse").reports.map_or(0, |r| r.len())
    );
    let _ = std::fs::remove_file(path);
}
