//! Profile cache: canonical key to nine parameter values, safe for
//! concurrent readers and writers, persisted as sorted text.

use std::path::Path;

use dashmap::DashMap;
use thiserror::Error;

use crate::canon::{canonical_key, CanonicalKey};
use crate::graph::Graph;
use crate::solvers::{full_profile, ParameterProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CacheError {
    #[error("cache i/o error: {0}")]
    Io(String),
    #[error("cache file line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
    #[error("cache collision for {key}: {existing:?} vs {incoming:?}")]
    Collision {
        key: String,
        existing: ParameterProfile,
        incoming: ParameterProfile,
    },
    #[error(transparent)]
    Consistency(#[from] crate::solvers::ConsistencyError),
}

#[derive(Debug, Default)]
pub struct ProfileCache {
    map: DashMap<String, ParameterProfile>,
}

impl ProfileCache {
    pub fn new() -> ProfileCache {
        ProfileCache {
            map: DashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<ParameterProfile> {
        self.map.get(key.as_str()).map(|r| *r)
    }

    /// Profile of `g`, computed on a cache miss and memoized under the
    /// canonical key, so isomorphic graphs are solved once.
    pub fn profile_of(&self, g: &Graph) -> Result<ParameterProfile, CacheError> {
        let key = canonical_key(g);
        if let Some(p) = self.map.get(key.as_str()) {
            return Ok(*p);
        }
        let p = full_profile(g)?;
        self.insert_checked(key, p)?;
        Ok(p)
    }

    /// Last write wins, with an equality assertion on collisions; unequal
    /// profiles under one key mean a nondeterministic solver and abort.
    pub fn insert_checked(
        &self,
        key: CanonicalKey,
        profile: ParameterProfile,
    ) -> Result<(), CacheError> {
        match self.map.entry(key.into_string()) {
            dashmap::mapref::entry::Entry::Vacant(e) => {
                e.insert(profile);
                Ok(())
            }
            dashmap::mapref::entry::Entry::Occupied(mut e) => {
                if *e.get() != profile {
                    return Err(CacheError::Collision {
                        key: e.key().clone(),
                        existing: *e.get(),
                        incoming: profile,
                    });
                }
                e.insert(profile);
                Ok(())
            }
        }
    }

    /// Merges `other` in, keying collisions on profile equality.
    pub fn merge(&self, other: ProfileCache) -> Result<(), CacheError> {
        for (key, profile) in other.map {
            self.insert_checked(CanonicalKey::from_string(key), profile)?;
        }
        Ok(())
    }

    /// Entries sorted by canonical key.
    pub fn entries_sorted(&self) -> Vec<(String, ParameterProfile)> {
        let mut out: Vec<(String, ParameterProfile)> = self
            .map
            .iter()
            .map(|r| (r.key().clone(), *r.value()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// One line per graph: `<canonical-graph6> <omega> <chi> <hadwiger>
    /// <psi> <alpha> <b> <B> <grundy> <pseudo_grundy>`, sorted by key.
    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let mut text = String::new();
        for (key, p) in self.entries_sorted() {
            text.push_str(&key);
            for v in p.values() {
                text.push(' ');
                text.push_str(&v.to_string());
            }
            text.push('\n');
        }
        std::fs::write(path, text).map_err(|e| CacheError::Io(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<ProfileCache, CacheError> {
        let text = std::fs::read_to_string(path).map_err(|e| CacheError::Io(e.to_string()))?;
        let cache = ProfileCache::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let key = tokens.next().ok_or_else(|| CacheError::Corrupt {
                line: line_no,
                reason: "missing canonical key".into(),
            })?;
            crate::graph6::parse_graph6(key).map_err(|e| CacheError::Corrupt {
                line: line_no,
                reason: format!("bad canonical key: {e}"),
            })?;
            let mut values = [0u32; 9];
            for slot in values.iter_mut() {
                let tok = tokens.next().ok_or_else(|| CacheError::Corrupt {
                    line: line_no,
                    reason: "expected nine parameter values".into(),
                })?;
                *slot = tok.parse().map_err(|_| CacheError::Corrupt {
                    line: line_no,
                    reason: format!("bad integer {tok:?}"),
                })?;
            }
            if let Some(extra) = tokens.next() {
                return Err(CacheError::Corrupt {
                    line: line_no,
                    reason: format!("trailing token {extra:?}"),
                });
            }
            cache.insert_checked(
                CanonicalKey::from_string(key.to_string()),
                ParameterProfile::from_values(values),
            )?;
        }
        Ok(cache)
    }
}
