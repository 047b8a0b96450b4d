//! Shared helpers for the criterion benches in `benches/`.

/// A dedicated pool so thread-scaling benches do not depend on the global one.
pub fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}
