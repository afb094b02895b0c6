use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Write-once table: a key computed twice keeps the first stored value.
pub(crate) struct OnceMap<K, V> {
    inner: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> OnceMap<K, V> {
    pub(crate) fn new() -> Self {
        OnceMap { inner: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get_or_insert_with(&self, k: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.inner.read().expect("cache lock").get(k) {
            return v.clone();
        }
        let v = Arc::new(f());
        let mut w = self.inner.write().expect("cache lock");
        w.entry(k.clone()).or_insert(v).clone()
    }

    pub(crate) fn get_or_try_insert_with<E>(
        &self,
        k: &K,
        f: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.inner.read().expect("cache lock").get(k) {
            return Ok(v.clone());
        }
        let v = Arc::new(f()?);
        let mut w = self.inner.write().expect("cache lock");
        Ok(w.entry(k.clone()).or_insert(v).clone())
    }
}
