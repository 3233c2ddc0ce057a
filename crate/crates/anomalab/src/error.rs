use anomalab_core::Error;

/// Failures of a CLI job, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 failed mathematical check, 2 input error, 3 resource cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::Size(_) => 3,
                Error::Domain(_) | Error::Mismatch(_) | Error::NotAutomorphism(_) | Error::Arithmetic(_) => 2,
                Error::Consistency(_) | Error::Convention(_) | Error::NotTrivialized(_) => 1,
            },
        }
    }
}
