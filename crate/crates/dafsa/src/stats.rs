use std::time::Duration;

/// Instrumentation collected by the builders.
///
/// `rr_visits` counts replace-or-register processings, i.e. how many
/// states went through a register lookup followed by a merge or an
/// insert. For a sorted build this equals the state count of the trie
/// for the input minus one: every trie state except the start/root is
/// processed exactly once.
#[derive(Debug, Clone, Default)]
pub struct BuildStats {
    pub words_read: u64,
    pub duplicates_skipped: u64,
    pub final_states: u64,
    pub live_states: u64,
    pub transitions: u64,
    pub peak_live_states: u64,
    pub rr_visits: u64,
    pub wall_time: Duration,
}

impl BuildStats {
    /// `key=value` lines, one per field, as printed by the CLI.
    pub fn lines(&self) -> String {
        format!(
            "words_read={}\nduplicates_skipped={}\nfinal_states={}\nlive_states={}\n\
             transitions={}\npeak_live_states={}\nrr_visits={}\nwall_time_ms={:.3}\n",
            self.words_read,
            self.duplicates_skipped,
            self.final_states,
            self.live_states,
            self.transitions,
            self.peak_live_states,
            self.rr_visits,
            self.wall_time.as_secs_f64() * 1e3,
        )
    }
}
