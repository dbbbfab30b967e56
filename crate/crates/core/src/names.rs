//! The curated name registry.
//!
//! A name is an ordered set of single-token variants plus a type. The first
//! variant is the main one and is used for display. Variant strings are
//! disjoint across the whole registry, so every token resolves to at most one
//! name.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NameType {
    #[serde(rename = "char")]
    Character,
    #[serde(rename = "place")]
    Place,
}

impl NameType {
    pub fn as_str(self) -> &'static str {
        match self {
            NameType::Character => "char",
            NameType::Place => "place",
        }
    }
}

impl fmt::Display for NameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NameType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "char" | "character" => Ok(NameType::Character),
            "place" => Ok(NameType::Place),
            other => Err(format!("unknown name type `{other}` (expected char or place)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NameId(pub u32);

impl fmt::Display for NameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NameEntry {
    pub id: NameId,
    #[serde(rename = "type")]
    pub ntype: NameType,
    pub variants: Vec<String>,
}

impl NameEntry {
    pub fn main_variant(&self) -> &str {
        &self.variants[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("variant `{variant}` already belongs to `{owner_name}` ({owner})")]
    Conflict {
        variant: String,
        owner: NameId,
        owner_name: String,
    },
    #[error("no name with id {0}")]
    NotFound(NameId),
    #[error("duplicate name id {0}")]
    DuplicateId(NameId),
    #[error("variants must be non-empty strings")]
    EmptyVariant,
    #[error("variant `{0}` is not a single token")]
    NotAToken(String),
    #[error("name {0} has no variants")]
    NoVariants(NameId),
}

#[derive(Debug, Clone, Default)]
pub struct NameRegistry {
    entries: Vec<NameEntry>,
    owners: HashMap<String, NameId>,
    next_id: u32,
}

impl PartialEq for NameRegistry {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for NameRegistry {}

impl NameRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rebuilds a registry from stored entries, enforcing every invariant.
    pub fn from_entries(entries: Vec<NameEntry>) -> Result<Self, RegistryError> {
        let mut registry = NameRegistry::new();
        for entry in entries {
            if registry.position(entry.id).is_some() {
                return Err(RegistryError::DuplicateId(entry.id));
            }
            if entry.variants.is_empty() {
                return Err(RegistryError::NoVariants(entry.id));
            }
            for variant in &entry.variants {
                registry.check_free(variant)?;
                // Also rejects duplicates inside the entry itself.
                registry.owners.insert(variant.clone(), entry.id);
            }
            registry.next_id = registry.next_id.max(entry.id.0 + 1);
            registry.entries.push(entry);
        }
        Ok(registry)
    }

    pub fn entries(&self) -> &[NameEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: NameId) -> Option<&NameEntry> {
        self.position(id).map(|i| &self.entries[i])
    }

    /// The name a token text resolves to, if any.
    pub fn owner_of(&self, variant: &str) -> Option<NameId> {
        self.owners.get(variant).copied()
    }

    pub fn add_name(&mut self, main_variant: &str, ntype: NameType) -> Result<NameId, RegistryError> {
        self.check_free(main_variant)?;
        let id = NameId(self.next_id);
        self.next_id += 1;
        self.owners.insert(main_variant.to_string(), id);
        self.entries.push(NameEntry {
            id,
            ntype,
            variants: vec![main_variant.to_string()],
        });
        Ok(id)
    }

    pub fn add_variant(&mut self, id: NameId, variant: &str) -> Result<(), RegistryError> {
        let index = self.position(id).ok_or(RegistryError::NotFound(id))?;
        self.check_free(variant)?;
        self.owners.insert(variant.to_string(), id);
        self.entries[index].variants.push(variant.to_string());
        Ok(())
    }

    pub fn remove_name(&mut self, id: NameId) -> Result<NameEntry, RegistryError> {
        let index = self.position(id).ok_or(RegistryError::NotFound(id))?;
        let entry = self.entries.remove(index);
        for variant in &entry.variants {
            self.owners.remove(variant);
        }
        Ok(entry)
    }

    /// Moves an existing variant to the front, making it the main variant.
    pub fn set_main_variant(&mut self, id: NameId, variant: &str) -> Result<(), RegistryError> {
        let index = self.position(id).ok_or(RegistryError::NotFound(id))?;
        match self.owners.get(variant) {
            Some(owner) if *owner == id => {}
            Some(owner) => return Err(self.conflict(variant, *owner)),
            None => return Err(RegistryError::NotFound(id)),
        }
        let variants = &mut self.entries[index].variants;
        let from = variants.iter().position(|v| v == variant).expect("owner map in sync");
        let v = variants.remove(from);
        variants.insert(0, v);
        Ok(())
    }

    fn position(&self, id: NameId) -> Option<usize> {
        self.entries.iter().position(|e| e.id == id)
    }

    fn check_free(&self, variant: &str) -> Result<(), RegistryError> {
        if variant.is_empty() {
            return Err(RegistryError::EmptyVariant);
        }
        if variant.chars().any(char::is_whitespace) {
            return Err(RegistryError::NotAToken(variant.to_string()));
        }
        match self.owners.get(variant) {
            Some(owner) => Err(self.conflict(variant, *owner)),
            None => Ok(()),
        }
    }

    fn conflict(&self, variant: &str, owner: NameId) -> RegistryError {
        RegistryError::Conflict {
            variant: variant.to_string(),
            owner,
            owner_name: self
                .get(owner)
                .map(|e| e.main_variant().to_string())
                .unwrap_or_default(),
        }
    }
}
