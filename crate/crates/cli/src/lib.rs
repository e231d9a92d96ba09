//! Support code for the `matchgame` binary: the persistent result cache.

pub mod store;
