//! Placeholder; replaced once the core library lands.
