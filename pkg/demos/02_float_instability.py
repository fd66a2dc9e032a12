"""
Why floats cannot invert a Hilbert matrix
=========================================

Inverting the float-rendered Hilbert matrix in binary64 works at tiny
orders, loses digits steadily, and by order 13 the computed entries are
wrong by more than their own size, while the exact integer inverse has
no error at all. This is the instability that makes the matrix family
attractive for the cipher: get the order wrong and a numeric inverse
tells you nothing.
"""

from hilbx.stability import report_text, stability_report

rows = stability_report(13)
print(report_text(rows))

err4 = rows[3].max_abs_err
err13 = rows[12].max_abs_err
print(f"error at n=4:  {err4:.3e}  (still fine)")
print(f"error at n=13: {err13:.3e}  (larger than the true entries)")
print(f"growth factor: {err13 / err4:.3e}")
