"""Affine flag varieties: fixed point arrangements, quadric cone, cohomology groupoid, moment images."""
