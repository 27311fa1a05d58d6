import json
from typing import Any, Optional

from pandas import DataFrame


def frame_to_text(
    df: DataFrame,
    as_json: bool = False,
    detail_column: Optional[str] = None,
) -> str:
    '''Render a report table for the terminal, or as JSON records.

    In text mode `detail_column` is left out of the table, and every non-empty
    value in it is printed after the table under a `# <row>` header.
    '''
    df = df.replace([float('inf'), float('-inf'), float('nan')], None)

    if as_json:
        return df.to_json(orient='records')

    if detail_column is None or detail_column not in df.columns:
        return df.to_string(index=False) if not df.empty else '(no rows)'

    table = df.drop(columns=[detail_column])
    blocks = [table.to_string(index=False) if not table.empty else '(no rows)']
    for position, detail in enumerate(df[detail_column], start=1):
        if detail:
            blocks.append(f'# row {position}\n{detail}')
    return '\n\n'.join(blocks)


def document_to_text(document: Any) -> str:
    return json.dumps(document, sort_keys=True)
