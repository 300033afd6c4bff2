//! Thread-safe memo tables.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// A lazily filled map from keys to shared values. The lock is not held
/// while a value is being computed, so two threads may compute the same
/// entry; the first one stored wins and both results are equal.
pub struct Memo<K, V> {
    map: Mutex<Option<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub const fn new() -> Self {
        Memo { map: Mutex::new(None) }
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        let guard = self.map.lock().unwrap();
        guard.as_ref().and_then(|m| m.get(key).cloned())
    }

    pub fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.get(key) {
            return v;
        }
        let value = Arc::new(compute());
        let mut guard = self.map.lock().unwrap();
        guard
            .get_or_insert_with(HashMap::new)
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }

    /// Stores a value unless one is already present; returns the stored one.
    pub fn insert(&self, key: K, value: V) -> Arc<V> {
        let mut guard = self.map.lock().unwrap();
        guard
            .get_or_insert_with(HashMap::new)
            .entry(key)
            .or_insert_with(|| Arc::new(value))
            .clone()
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
