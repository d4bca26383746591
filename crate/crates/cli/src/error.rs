use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Model(#[from] uswqed::Error),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 configuration, 3 numerical failure, 4 overcritical coupling.
    pub fn exit_code(&self) -> u8 {
        use uswqed::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Model(E::OvercriticalCoupling { .. }) => 4,
            CliError::Model(E::InvalidParameter(_) | E::NoRealStationaryPoint { .. }) => 2,
            CliError::Model(_) | CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}
