"""The algebra D_m, its PBW rewriter and its action on (n+m)_n."""
