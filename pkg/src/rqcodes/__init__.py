"""Cyclic codes over R = F2+uF2+u^2F2 and the quantum codes they give."""
