use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub name: String,
    pub detail: String,
}

/// Text produced by a command plus the checks that failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub out: String,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure { name: name.into(), detail: detail.into() });
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// One `FAIL\t<name>\t<detail>` line per failure.
    pub fn failure_text(&self) -> String {
        let mut s = String::new();
        for f in &self.failures {
            let _ = writeln!(s, "FAIL\t{}\t{}", f.name, f.detail);
        }
        s
    }
}
