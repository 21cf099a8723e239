# Tests for dpham
