pub struct EvidenceLedger;
