pub const DEFAULT_ENTRY_CAP: usize = 100_000_000;
