//! Constructed instance families: double circles and double chains.
