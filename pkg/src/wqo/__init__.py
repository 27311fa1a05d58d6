'''Antichains of the contraction order and the well-quasi-order probe.'''
