//! Data-parallel helpers. With the `parallel` feature these dispatch to rayon;
//! without it they run sequentially. Output order is always the input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
const MIN_PAR: usize = 16;

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if items.len() < MIN_PAR {
        items.iter().map(f).collect()
    } else {
        items.par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    if items.len() < MIN_PAR {
        items.iter_mut().for_each(f)
    } else {
        items.par_iter_mut().for_each(f)
    }
}

#[cfg(not(feature = "parallel"))]
pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    items.iter_mut().for_each(f)
}

/// Sequential map, regardless of features. Used by benches and determinism tests.
pub fn map_seq<T, R, F: Fn(&T) -> R>(items: &[T], f: F) -> Vec<R> {
    items.iter().map(f).collect()
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Thread-safe memo table.
#[derive(Debug)]
pub struct Memo<K, V> {
    map: std::sync::RwLock<std::collections::HashMap<K, std::sync::Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self { map: std::sync::RwLock::new(std::collections::HashMap::new()) }
    }
}

impl<K: std::hash::Hash + Eq + Clone, V> Memo<K, V> {
    pub fn get_or(&self, k: &K, f: impl FnOnce() -> V) -> std::sync::Arc<V> {
        if let Some(v) = self.map.read().unwrap().get(k) {
            return v.clone();
        }
        let v = std::sync::Arc::new(f());
        self.map.write().unwrap().entry(k.clone()).or_insert(v).clone()
    }
}
