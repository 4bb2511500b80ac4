"""Domain services: the sc_ldpc package and report serialization."""
