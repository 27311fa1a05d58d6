'''Multigraph values, the contraction order, bonds and decompositions.'''
