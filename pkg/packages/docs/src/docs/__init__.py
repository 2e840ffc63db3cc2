"""Documentation site for the geo-indistinguishable mechanism toolkit."""
