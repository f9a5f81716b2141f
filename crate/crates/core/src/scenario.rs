pub struct CoinConfig;
pub struct RavenConfig;
pub struct ScenarioReport;
