"""Services like configuration, report management, oracles and corpora."""
