//! Build a name registry by hand, the way a curator would from the raw word
//! list, then save it as a project file.
//!
//!     cargo run --example curate_registry -- [OUT.toml]

use std::path::PathBuf;

use charnet::names::{NameRegistry, NameType, RegistryError};
use charnet::project::{load_project, save_project, ProjectFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let texts = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/toy/texts");
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("charnet-curated.toml"));

    let mut reg = NameRegistry::new();
    let hagen = reg.add_name("Hagen", NameType::Character)?;
    reg.add_variant(hagen, "Hagene")?;
    let gunther = reg.add_name("Gunther", NameType::Character)?;
    reg.add_variant(gunther, "Gunther's")?;
    reg.add_name("Tronege", NameType::Place)?;
    let rin = reg.add_name("Rin", NameType::Place)?;
    reg.add_variant(rin, "Rîn")?;
    reg.set_main_variant(rin, "Rîn")?;

    // A variant belongs to at most one name.
    match reg.add_variant(gunther, "Hagene") {
        Err(RegistryError::Conflict { variant, owner_name, .. }) => {
            println!("refused: `{variant}` already belongs to {owner_name}")
        }
        other => panic!("expected a conflict, got {other:?}"),
    }

    // Removing a name frees its variants.
    let removed = reg.remove_name(hagen)?;
    println!("removed {} ({} variants)", removed.main_variant(), removed.variants.len());
    let hagen = reg.add_name("Hagen", NameType::Character)?;
    reg.add_variant(hagen, "Hagene")?;

    for e in reg.entries() {
        println!("{:>3} {:<6} {}", e.id.0, e.ntype, e.variants.join(", "));
    }

    let mut project = ProjectFile::new(texts);
    project.registry = reg;
    save_project(&project, &out)?;
    assert_eq!(load_project(&out)?, project);
    println!("\nwrote {}:\n{}", out.display(), std::fs::read_to_string(&out)?);
    Ok(())
}
